#include "nmi/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace nmi {

namespace {

VertexSet bit(std::size_t v) { return VertexSet{1} << v; }

VertexSet full_set(std::size_t n) { return n == 64 ? ~VertexSet{0} : bit(n) - 1; }

void check_size(std::size_t n) {
    if (n > max_vertices) throw UnsupportedInput("at most 64 vertices are supported");
}

// Removes vertex v from a mask and shifts higher vertices down.
VertexSet drop_vertex(VertexSet s, std::size_t v) {
    VertexSet low = s & (bit(v) - 1);
    VertexSet high = v + 1 < 64 ? (s >> (v + 1)) << v : 0;
    return low | high;
}

std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (VertexSet s : sets) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return (k & s) == k; });
        if (!redundant) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace

std::vector<std::size_t> members(VertexSet s) {
    std::vector<std::size_t> out;
    while (s) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
        s &= s - 1;
    }
    return out;
}

VertexSet mask_of(const std::vector<std::size_t>& vertices) {
    VertexSet s = 0;
    for (auto v : vertices) {
        if (v >= max_vertices) throw InvalidArgument("vertex index out of range");
        s |= bit(v);
    }
    return s;
}

std::string set_to_string(VertexSet s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (auto v : members(s)) {
        if (!first) out << ',';
        first = false;
        out << v + 1;
    }
    out << '}';
    return out.str();
}

Clutter::Clutter(std::size_t num_vertices, std::vector<VertexSet> edges) : n_(num_vertices) {
    check_size(num_vertices);
    for (VertexSet e : edges)
        if (e & ~full_set(num_vertices)) throw InvalidArgument("edge uses a vertex outside the vertex set");
    edges_ = minimal_sets(std::move(edges));
}

Graph::Graph(std::size_t num_vertices) : adj_(num_vertices, 0) { check_size(num_vertices); }

Graph::Graph(std::size_t num_vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : Graph(num_vertices) {
    for (auto [u, v] : edges) {
        if (u >= num_vertices || v >= num_vertices) throw InvalidArgument("edge uses a vertex outside the graph");
        if (u == v) throw InvalidArgument("loops are not allowed");
        if (adjacent(u, v))
            throw InvalidArgument("repeated edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "}");
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }
}

std::size_t Graph::num_edges() const {
    std::size_t twice = 0;
    for (VertexSet a : adj_) twice += static_cast<std::size_t>(std::popcount(a));
    return twice / 2;
}

VertexSet Graph::neighbors_of(VertexSet s) const {
    VertexSet out = 0;
    for (auto v : members(s)) out |= adj_[v];
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edge_list() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (auto v : members(adj_[u]))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Clutter Graph::clutter() const {
    std::vector<VertexSet> edges;
    for (auto [u, v] : edge_list()) edges.push_back(bit(u) | bit(v));
    return Clutter(num_vertices(), std::move(edges));
}

Graph Graph::remove(VertexSet removed) const {
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < num_vertices(); ++v)
        if (!((removed >> v) & 1u)) keep.push_back(v);
    std::vector<std::size_t> index(num_vertices(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = i;
    Graph H(keep.size());
    for (auto [u, v] : edge_list()) {
        if (((removed >> u) & 1u) || ((removed >> v) & 1u)) continue;
        H.adj_[index[u]] |= bit(index[v]);
        H.adj_[index[v]] |= bit(index[u]);
    }
    return H;
}

MonomialIdeal edge_ideal(const Clutter& C) {
    std::vector<Exponent> gens;
    for (VertexSet e : C.edges()) {
        Exponent g(C.num_vertices());
        for (auto v : members(e)) g[v] = 1;
        gens.push_back(std::move(g));
    }
    return make_ideal(C.num_vertices(), std::move(gens));
}

MonomialIdeal edge_ideal(const Graph& G) { return edge_ideal(G.clutter()); }

Clutter blocker(const Clutter& C) {
    const auto& edges = C.edges();
    std::vector<VertexSet> found;
    std::unordered_set<VertexSet> visited;
    // Branch on the vertices of the first edge missed by the partial cover;
    // a completed cover is kept when every vertex has a private edge.
    std::function<void(VertexSet)> branch = [&](VertexSet partial) {
        if (!visited.insert(partial).second) return;
        for (VertexSet f : found)
            if ((f & partial) == f) return;
        auto missed = std::find_if(edges.begin(), edges.end(), [&](VertexSet e) { return (e & partial) == 0; });
        if (missed == edges.end()) {
            for (auto v : members(partial)) {
                VertexSet rest = partial & ~bit(v);
                bool still_covers =
                    std::all_of(edges.begin(), edges.end(), [&](VertexSet e) { return (e & rest) != 0; });
                if (still_covers) return;
            }
            found.push_back(partial);
            return;
        }
        for (auto v : members(*missed)) branch(partial | bit(v));
    };
    branch(0);
    return Clutter(C.num_vertices(), std::move(found));
}

MonomialIdeal cover_ideal(const Clutter& C) { return edge_ideal(blocker(C)); }

MonomialIdeal cover_ideal(const Graph& G) { return cover_ideal(G.clutter()); }

Clutter deletion(const Clutter& C, std::size_t v) {
    if (v >= C.num_vertices()) throw InvalidArgument("deletion: unknown vertex " + std::to_string(v + 1));
    std::vector<VertexSet> edges;
    for (VertexSet e : C.edges())
        if (!((e >> v) & 1u)) edges.push_back(drop_vertex(e, v));
    return Clutter(C.num_vertices() - 1, std::move(edges));
}

Clutter contraction(const Clutter& C, std::size_t v) {
    if (v >= C.num_vertices()) throw InvalidArgument("contraction: unknown vertex " + std::to_string(v + 1));
    std::vector<VertexSet> edges;
    for (VertexSet e : C.edges()) edges.push_back(drop_vertex(e & ~bit(v), v));
    return Clutter(C.num_vertices() - 1, std::move(edges));
}

MinorScanReport minor_normality_scan(const Clutter& C, int depth, const Budget& budget) {
    MinorScanReport report;
    report.base_normal = normality_via_rees(cover_ideal(C), budget).normal;
    if (!report.base_normal) return report;
    std::set<std::pair<std::size_t, std::vector<VertexSet>>> seen;
    std::vector<std::pair<Clutter, std::string>> layer{{C, ""}};
    for (int d = 0; d < depth; ++d) {
        std::vector<std::pair<Clutter, std::string>> next;
        for (const auto& [H, path] : layer) {
            for (std::size_t v = 0; v < H.num_vertices(); ++v) {
                const std::string label = std::to_string(v + 1);
                for (int op = 0; op < 2; ++op) {
                    Clutter M = op == 0 ? deletion(H, v) : contraction(H, v);
                    std::string desc = path + (op == 0 ? "\\t" : "/t") + label;
                    if (!seen.insert({M.num_vertices(), M.edges()}).second) continue;
                    budget.check_time("minor scan");
                    ++report.minors_checked;
                    if (!normality_via_rees(cover_ideal(M), budget).normal) report.violations.push_back(desc);
                    next.emplace_back(std::move(M), std::move(desc));
                }
            }
        }
        layer = std::move(next);
    }
    return report;
}

Graph complement(const Graph& G) {
    const std::size_t n = G.num_vertices();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!G.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Clutter clique_clutter(const Graph& G) {
    std::vector<VertexSet> cliques;
    std::function<void(VertexSet, VertexSet, VertexSet)> bron_kerbosch = [&](VertexSet R, VertexSet P, VertexSet X) {
        if (P == 0 && X == 0) {
            cliques.push_back(R);
            return;
        }
        // Pivot on the vertex of P ∪ X with the most neighbours in P.
        std::size_t pivot = 0;
        int best = -1;
        for (auto u : members(P | X)) {
            int deg = std::popcount(P & G.neighbors(u));
            if (deg > best) {
                best = deg;
                pivot = u;
            }
        }
        for (auto v : members(P & ~G.neighbors(pivot))) {
            bron_kerbosch(R | bit(v), P & G.neighbors(v), X & G.neighbors(v));
            P &= ~bit(v);
            X |= bit(v);
        }
    };
    if (G.num_vertices() > 0) bron_kerbosch(0, full_set(G.num_vertices()), 0);
    return Clutter(G.num_vertices(), std::move(cliques));
}

MonomialIdeal cover_ideal_via_cliques(const Graph& G) {
    return dual_star(edge_ideal(clique_clutter(complement(G))));
}

std::size_t independence_number(const Graph& G) {
    // Maximum clique of the complement by branch and bound.
    const Graph H = complement(G);
    std::size_t best = 0;
    std::function<void(VertexSet, std::size_t)> grow = [&](VertexSet candidates, std::size_t size) {
        if (candidates == 0) {
            best = std::max(best, size);
            return;
        }
        if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
        std::size_t v = static_cast<std::size_t>(std::countr_zero(candidates));
        grow(candidates & H.neighbors(v), size + 1);
        grow(candidates & ~bit(v), size);
    };
    grow(full_set(G.num_vertices()), 0);
    return best;
}

std::vector<Component> connected_components(const Graph& G) {
    std::vector<Component> out;
    VertexSet unseen = full_set(G.num_vertices());
    while (unseen) {
        VertexSet comp = unseen & (~unseen + 1);
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = G.neighbors_of(frontier) & ~comp;
            comp |= next;
            frontier = next;
        }
        unseen &= ~comp;
        out.push_back({G.remove(full_set(G.num_vertices()) & ~comp), members(comp)});
    }
    return out;
}

Graph cone_over(const Graph& G) {
    const std::size_t n = G.num_vertices();
    auto edges = G.edge_list();
    for (std::size_t v = 0; v < n; ++v) edges.emplace_back(v, n);
    return Graph(n + 1, edges);
}

std::string cycle_to_string(const Cycle& c) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out << ' ';
        out << c[i] + 1;
    }
    out << ')';
    return out.str();
}

std::vector<Cycle> induced_odd_cycles(const Graph& G, std::size_t max_len) {
    const std::size_t n = G.num_vertices();
    std::vector<Cycle> out;
    Cycle path;
    // Induced paths from the smallest vertex `start`; a new vertex may touch
    // the path only at its end, or also at `start` when it closes the cycle.
    std::function<void(std::size_t, VertexSet)> extend = [&](std::size_t start, VertexSet on_path) {
        const std::size_t last = path.back();
        VertexSet interior = on_path & ~bit(start) & ~bit(last);
        for (auto v : members(G.neighbors(last) & ~on_path)) {
            if (v <= start) continue;
            if (G.neighbors(v) & interior) continue;
            if (G.adjacent(v, start)) {
                if (path.size() >= 2 && path[1] < v && (path.size() + 1) % 2 == 1 && path.size() + 1 <= max_len) {
                    Cycle c = path;
                    c.push_back(v);
                    out.push_back(std::move(c));
                }
                continue;
            }
            if (path.size() + 1 < max_len) {
                path.push_back(v);
                extend(start, on_path | bit(v));
                path.pop_back();
            }
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        for (auto a : members(G.neighbors(s))) {
            if (a <= s) continue;
            path = {s, a};
            extend(s, bit(s) | bit(a));
        }
    }
    std::sort(out.begin(), out.end(), [](const Cycle& x, const Cycle& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

bool hochster_condition(const Graph& G, const Cycle& c1, const Cycle& c2) {
    return (mask_of(c1) & G.neighbors_of(mask_of(c2))) == 0;
}

std::vector<HochsterConfig> hochster_configurations(const Graph& G, std::size_t min_len) {
    auto cycles = induced_odd_cycles(G, G.num_vertices());
    std::erase_if(cycles, [&](const Cycle& c) { return c.size() < min_len; });
    std::vector<HochsterConfig> out;
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            if (hochster_condition(G, cycles[i], cycles[j]) || hochster_condition(G, cycles[j], cycles[i]))
                out.push_back({cycles[i], cycles[j]});
    return out;
}

bool edge_ideal_normality_combinatorial(const Graph& G) { return hochster_configurations(G).empty(); }

MMonomial m_monomial(std::size_t num_vertices, const Cycle& c1, const Cycle& c2) {
    if (c1.size() % 2 == 0 || c2.size() % 2 == 0) throw InvalidArgument("m_monomial: cycles must be odd");
    if (std::popcount(mask_of(c1) & mask_of(c2)) > 1)
        throw InvalidArgument("m_monomial: cycles share more than one vertex");
    Exponent e(num_vertices);
    for (auto v : c1) e[v] += 1;
    for (auto v : c2) e[v] += 1;
    return {e, static_cast<int>((c1.size() + c2.size()) / 2)};
}

bool neighbors_form_minimal_cover(const Graph& G, std::size_t v) {
    const VertexSet cover = G.neighbors(v);
    auto covers = [&](VertexSet s) {
        for (auto [a, b] : G.edge_list())
            if (!((s >> a) & 1u) && !((s >> b) & 1u)) return false;
        return true;
    };
    if (!covers(cover)) return false;
    for (auto u : members(cover))
        if (covers(cover & ~bit(u))) return false;
    return true;
}

ReductionReport neighbor_mvc_reduction(const Graph& G, const Budget& budget) {
    ReductionReport report;
    Graph current = G;
    std::vector<std::size_t> labels(G.num_vertices());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i;
    while (current.num_edges() > 0) {
        std::optional<std::size_t> pick;
        for (std::size_t v = 0; v < current.num_vertices() && !pick; ++v)
            if (neighbors_form_minimal_cover(current, v)) pick = v;
        if (!pick) break;
        report.chain.push_back(labels[*pick]);
        labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(*pick));
        current = current.remove(bit(*pick));
    }
    report.residual = current;
    report.residual_vertices = labels;
    try {
        report.residual_normal = normality_via_rees(cover_ideal(current), budget).normal;
    } catch (const BudgetExceeded&) {
    }
    if (!report.chain.empty()) report.verdict = report.residual_normal;
    return report;
}

DualityReport duality_criterion(const Graph& G) {
    DualityReport report;
    report.independence_number = independence_number(G);
    if (report.independence_number > 2)
        throw UnsupportedInput("the duality criterion needs independence number at most 2, this graph has " +
                               std::to_string(report.independence_number) +
                               "; beyond 2 neither implication holds in general (Kaiser graph H4)");
    report.complement_configurations = hochster_configurations(complement(G));
    report.cover_ideal_normal = report.complement_configurations.empty();
    return report;
}

NecessaryConditionReport necessary_condition_check(const Graph& G) {
    NecessaryConditionReport report;
    auto configs = hochster_configurations(complement(G), 5);
    if (!configs.empty()) {
        report.normal = false;
        report.configuration = configs.front();
    }
    return report;
}

}  // namespace nmi
