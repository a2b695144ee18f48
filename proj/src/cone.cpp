#include "nmi/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "int_arith.hpp"
#include "nmi/closure.hpp"
#include "triangulation.hpp"

namespace nmi {

using detail::Int;
using detail::IntVec;

std::string to_string(const IntVector& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << v[i];
    }
    out << ')';
    return out.str();
}

namespace {

// Integer w with ⟨w,g⟩ ≥ 1 on every generator, or nullopt when the cone
// contains a line.
std::optional<IntVec> positive_functional(const std::vector<IntVec>& gens, std::size_t dim) {
    bool ones = std::all_of(gens.begin(), gens.end(), [](const IntVec& g) {
        Int s = 0;
        for (Int e : g) s = detail::add(s, e);
        return s >= 1;
    });
    if (ones) return IntVec(dim, 1);
    // min Σ(w⁺ + w⁻) subject to G(w⁺ − w⁻) ≥ 1.
    lp::QMatrix A(gens.size(), 2 * dim);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            A(i, j) = gens[i][j];
            A(i, dim + j) = -gens[i][j];
        }
    }
    lp::QVector b(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) b[i] = 1;
    lp::QVector c(2 * dim);
    for (std::size_t j = 0; j < 2 * dim; ++j) c[j] = 1;
    auto sol = lp::lp_min(A, b, c);
    if (sol.status != lp::LPStatus::optimal) return std::nullopt;
    std::vector<lp::Rational> w(dim);
    mpz_class l = 1;
    for (std::size_t j = 0; j < dim; ++j) {
        w[j] = (*sol.primal)[j] - (*sol.primal)[dim + j];
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w[j].get_den_mpz_t());
    }
    IntVec out(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        mpz_class n = w[j].get_num() * (l / w[j].get_den());
        if (!n.fits_slong_p()) detail::overflow();
        out[j] = n.get_si();
    }
    detail::make_primitive(out);
    return out;
}

// Triangulated cone in the coordinates of the saturated lattice it spans.
struct Prepared {
    std::size_t dim = 0;
    std::size_t rdim = 0;
    bool full = true;
    std::vector<IntVec> basis;
    std::vector<IntVec> gens_amb;  // deduplicated, first-occurrence order
    std::vector<IntVec> gens_red;
    std::vector<std::size_t> source_index;
    detail::Triangulation tri;

    std::optional<IntVec> reduce(const IntVec& amb) const {
        if (full) return amb;
        return detail::lattice_coordinates(basis, amb);
    }

    IntVec ambient(const IntVec& red) const {
        if (full) return red;
        IntVec out(dim, 0);
        for (std::size_t k = 0; k < rdim; ++k)
            for (std::size_t i = 0; i < dim; ++i)
                out[i] = detail::add(out[i], detail::mul(red[k], basis[k][i]));
        return out;
    }

    IntVec heights(const IntVec& red) const {
        IntVec h(tri.facets.size());
        for (std::size_t f = 0; f < tri.facets.size(); ++f) h[f] = detail::dot(tri.facets[f], red);
        return h;
    }
};

Prepared prepare(const IntegerCone& C, const Budget& budget) {
    Prepared P;
    P.dim = C.dim();
    std::set<IntVec> seen;
    for (std::size_t i = 0; i < C.generators().size(); ++i) {
        const auto& g = C.generators()[i];
        if (seen.insert(g).second) {
            P.gens_amb.push_back(g);
            P.source_index.push_back(i);
        }
    }
    P.rdim = detail::rank(P.gens_amb, P.dim);
    P.full = P.rdim == P.dim;
    if (P.full) {
        P.gens_red = P.gens_amb;
    } else {
        P.basis = detail::saturated_basis(P.gens_amb, P.dim);
        for (const auto& g : P.gens_amb) {
            auto red = detail::lattice_coordinates(P.basis, g);
            if (!red) throw std::logic_error("generator outside its own saturated lattice");
            P.gens_red.push_back(std::move(*red));
        }
    }
    P.tri = detail::triangulate(P.gens_red, P.rdim, budget);
    return P;
}

bool dominated(const IntVec& lower, const IntVec& upper) {
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (lower[i] > upper[i]) return false;
    return true;
}

struct VecHash {
    std::size_t operator()(const std::pair<IntVec, std::size_t>& k) const noexcept {
        std::size_t h = k.second;
        for (auto e : k.first) h = h * 1000003u ^ static_cast<std::size_t>(e);
        return h;
    }
};

// Depth-first search for x = Σ g_i over multisets of generators, in facet
// height coordinates. Generators are tried in nonincreasing index order;
// failures are memoized on (residual, largest allowed index).
std::optional<std::vector<std::size_t>> semigroup_search(const Prepared& P, const IntVec& x_red,
                                                         const Budget& budget) {
    std::vector<IntVec> gh;
    for (const auto& g : P.gens_red) gh.push_back(P.heights(g));
    IntVec target = P.heights(x_red);
    for (Int v : target)
        if (v < 0) return std::nullopt;
    std::unordered_set<std::pair<IntVec, std::size_t>, VecHash> dead;
    std::vector<std::size_t> path;
    std::uint64_t nodes = 0;

    auto is_zero = [](const IntVec& h) { return std::all_of(h.begin(), h.end(), [](Int e) { return e == 0; }); };

    auto search = [&](auto&& self, IntVec& res, std::size_t limit) -> bool {
        if (is_zero(res)) return true;
        if (++nodes % 4096 == 0) {
            budget.check_time("semigroup membership search");
            budget.require_points(nodes, "semigroup membership search");
        }
        std::pair<IntVec, std::size_t> key{res, limit};
        if (dead.count(key)) return false;
        for (std::size_t i = limit; i-- > 0;) {
            if (!dominated(gh[i], res)) continue;
            for (std::size_t f = 0; f < res.size(); ++f) res[f] -= gh[i][f];
            path.push_back(i);
            bool ok = self(self, res, i + 1);
            for (std::size_t f = 0; f < res.size(); ++f) res[f] += gh[i][f];
            if (ok) return true;
            path.pop_back();
        }
        dead.insert(std::move(key));
        return false;
    };
    if (!search(search, target, gh.size())) return std::nullopt;
    std::vector<std::size_t> out;
    for (auto i : path) out.push_back(P.source_index[i]);
    std::sort(out.begin(), out.end());
    return out;
}

Exponent exponent_from(const IntVec& v, std::size_t count) {
    std::vector<int> e(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (v[i] < 0 || v[i] > INT32_MAX) throw std::logic_error("cone witness is not a monomial exponent");
        e[i] = static_cast<int>(v[i]);
    }
    return Exponent(std::move(e));
}

}  // namespace

IntegerCone::IntegerCone(std::size_t dim, std::vector<IntVector> generators)
    : dim_(dim), generators_(std::move(generators)) {
    if (dim == 0) throw InvalidArgument("cone dimension must be positive");
    if (generators_.empty()) throw InvalidArgument("cone needs at least one generator");
    for (const auto& g : generators_) {
        if (g.size() != dim)
            throw InvalidArgument("generator " + to_string(g) + " does not have " + std::to_string(dim) + " entries");
        if (std::all_of(g.begin(), g.end(), [](Int e) { return e == 0; }))
            throw InvalidArgument("cone generators must be nonzero");
    }
    auto w = positive_functional(generators_, dim);
    if (!w) throw UnsupportedInput("cone is not pointed");
    grading_ = std::move(*w);
}

bool cone_contains(const IntegerCone& C, const IntVector& x) {
    if (x.size() != C.dim()) throw InvalidArgument("cone_contains: arity mismatch");
    const auto& G = C.generators();
    const std::size_t d = C.dim();
    lp::QMatrix A(2 * d, G.size());
    lp::QVector b(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < G.size(); ++j) {
            A(i, j) = G[j][i];
            A(d + i, j) = -G[j][i];
        }
        b[i] = x[i];
        b[d + i] = -x[i];
    }
    auto sol = lp::lp_max(A, b, lp::QVector(G.size()));
    return sol.status == lp::LPStatus::optimal;
}

std::optional<std::vector<std::size_t>> semigroup_membership(const IntegerCone& C, const IntVector& x,
                                                             const Budget& budget) {
    if (x.size() != C.dim()) throw InvalidArgument("semigroup_membership: arity mismatch");
    Prepared P = prepare(C, budget);
    auto red = P.reduce(x);
    if (!red) return std::nullopt;
    return semigroup_search(P, *red, budget);
}

HilbertBasisReport hilbert_basis(const IntegerCone& C, const Budget& budget) {
    Prepared P = prepare(C, budget);
    const auto& grading = C.grading();

    struct Candidate {
        IntVec amb;
        IntVec heights;
        Int degree;
    };
    std::set<IntVec> generator_set(P.gens_red.begin(), P.gens_red.end());
    std::vector<IntVec> gen_heights;
    for (const auto& g : P.gens_red) gen_heights.push_back(P.heights(g));

    // Parallelepiped points that dominate a generator in every facet height
    // are that generator plus a cone point, hence reducible.
    std::set<IntVec> extra;
    std::uint64_t total = 0;
    for (const auto& simplex : P.tri.simplices) {
        std::vector<IntVec> rows;
        for (auto i : simplex) rows.push_back(P.gens_red[i]);
        auto pts = detail::parallelepiped_points(rows, budget);
        total += pts.size();
        budget.require_points(total, "Hilbert basis candidates");
        for (auto& p : pts) {
            if (generator_set.count(p) || extra.count(p)) continue;
            IntVec h = P.heights(p);
            bool reducible = std::any_of(gen_heights.begin(), gen_heights.end(),
                                         [&](const IntVec& gh) { return dominated(gh, h); });
            if (!reducible) extra.insert(std::move(p));
        }
        budget.check_time("Hilbert basis candidates");
    }

    std::vector<Candidate> cands;
    auto push = [&](const IntVec& red) {
        IntVec amb = P.ambient(red);
        Int deg = detail::dot(grading, amb);
        cands.push_back({std::move(amb), P.heights(red), deg});
    };
    for (const auto& g : P.gens_red) push(g);
    for (const auto& p : extra) push(p);
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.amb < b.amb;
    });

    std::vector<const Candidate*> accepted;
    for (const auto& c : cands) {
        bool reducible = std::any_of(accepted.begin(), accepted.end(),
                                     [&](const Candidate* y) { return dominated(y->heights, c.heights); });
        if (!reducible) accepted.push_back(&c);
    }

    HilbertBasisReport report;
    report.simplices = P.tri.simplices.size();
    report.parallelepiped_points = total;
    std::set<IntVec> gens_amb(P.gens_amb.begin(), P.gens_amb.end());
    for (const auto* c : accepted) {
        report.minimal_hb.push_back(c->amb);
        if (!report.witness && !gens_amb.count(c->amb)) report.witness = c->amb;
    }
    report.facets = P.tri.facets;
    report.input_is_hb = !report.witness.has_value();
    if (report.witness) {
        auto red = P.reduce(*report.witness);
        if (!red || !cone_contains(C, *report.witness) || semigroup_search(P, *red, budget))
            throw std::logic_error("Hilbert basis witness failed re-verification");
    }
    return report;
}

IntegerCone rees_cone(const MonomialIdeal& I) {
    if (!I.is_proper())
        throw UnsupportedInput(std::string("Rees cone of the ") + to_string(I.kind()) + " ideal");
    const std::size_t s = I.num_vars();
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < s; ++i) {
        IntVector e(s + 1, 0);
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    for (const auto& v : I.gens()) {
        IntVector g(v.entries().begin(), v.entries().end());
        g.push_back(1);
        gens.push_back(std::move(g));
    }
    return IntegerCone(s + 1, std::move(gens));
}

IntegerCone b_set(const MonomialIdeal& I) {
    if (!I.is_proper())
        throw UnsupportedInput(std::string("the set B of the ") + to_string(I.kind()) + " ideal");
    const std::size_t s = I.num_vars();
    std::vector<IntVector> gens;
    IntVector top(s + 1, 0);
    top[s] = 1;
    gens.push_back(top);
    for (std::size_t i = 0; i < s; ++i) {
        IntVector e = top;
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    for (const auto& v : I.gens()) {
        IntVector g(v.entries().begin(), v.entries().end());
        g.push_back(1);
        gens.push_back(std::move(g));
    }
    return IntegerCone(s + 1, std::move(gens));
}

NormalityReport normality_via_rees(const MonomialIdeal& I, const Budget& budget) {
    NormalityReport report;
    if (!I.is_proper()) {
        report.normal = true;
        report.route = "convention";
        return report;
    }
    report.route = "rees";
    auto hb = hilbert_basis(rees_cone(I), budget);
    report.normal = hb.input_is_hb;
    report.hilbert_basis_size = hb.minimal_hb.size();
    if (!hb.witness) return report;

    const std::size_t s = I.num_vars();
    const IntVec& w = *hb.witness;
    report.cone_witness = w;
    Exponent a = exponent_from(w, s);
    if (w[s] < 1 || w[s] > INT32_MAX) throw std::logic_error("Rees witness has no positive level");
    const int n = static_cast<int>(w[s]);
    auto verdict = closure_membership(I, a, n);
    if (!verdict.member || !verify_membership(I, a, n, verdict))
        throw std::logic_error("Rees witness is not in the integral closure");
    if (power_membership(I, a, n)) throw std::logic_error("Rees witness lies in the ordinary power");
    report.witness_monomial = a;
    report.witness_power = n;
    report.witness_lp_value = verdict.lp_value;

    // λ has Aλ ≤ a and ⟨λ,1⟩ = n; clearing denominators gives p·λ ∈ ℕ^q
    // with A(pλ) ≤ pa and ⟨pλ,1⟩ = pn, i.e. (t^a)^p ∈ I^{pn}.
    mpz_class p = 1;
    for (const auto& e : verdict.witness) mpz_lcm(p.get_mpz_t(), p.get_mpz_t(), e.get_den_mpz_t());
    if (!p.fits_sint_p()) detail::overflow();
    report.scale_p = static_cast<int>(p.get_si());
    for (const auto& e : verdict.witness) {
        mpq_class m = e * p;
        report.scale_multiplicities.push_back(m.get_num().get_si());
    }
    return report;
}

NormalityReport normality_via_bset(const MonomialIdeal& I, const Budget& budget) {
    NormalityReport report;
    for (const auto& g : I.gens()) {
        if (g.degree() != 2)
            throw UnsupportedInput("the B criterion needs generators of degree 2; " + to_monomial_string(g) +
                                   " has degree " + std::to_string(g.degree()));
    }
    if (!I.is_proper()) {
        report.normal = true;
        report.route = "convention";
        return report;
    }
    report.route = "bset";
    auto hb = hilbert_basis(b_set(I), budget);
    report.normal = hb.input_is_hb;
    report.hilbert_basis_size = hb.minimal_hb.size();
    report.cone_witness = hb.witness;
    return report;
}

bool dual_normality(const MonomialIdeal& I, const Budget& budget) {
    if (!I.is_proper() || !I.is_squarefree() || I.common_degree() != 2)
        throw UnsupportedInput("dual normality needs the edge ideal of a graph");
    return normality_via_rees(I, budget).normal;
}

}  // namespace nmi
