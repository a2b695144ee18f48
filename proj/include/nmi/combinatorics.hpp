#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nmi/budget.hpp"
#include "nmi/cone.hpp"
#include "nmi/ideal.hpp"

namespace nmi {

/// Vertex set as a bit mask; bit i is vertex i (0-based). At most 64 vertices.
using VertexSet = std::uint64_t;

constexpr std::size_t max_vertices = 64;

std::vector<std::size_t> members(VertexSet s);
VertexSet mask_of(const std::vector<std::size_t>& vertices);
/// "{1,3,4}" with 1-based labels.
std::string set_to_string(VertexSet s);

/// Vertex set {0,…,n−1} with an antichain of edges, sorted by mask value.
///
/// Edges are nonempty except in the trivial clutter {∅}, which arises as a
/// contraction of a clutter with a one-vertex edge and as the blocker of an
/// edgeless clutter; its edge ideal is the unit ideal.
class Clutter {
public:
    Clutter() = default;
    /// Minimalizes `edges` under inclusion. Throws InvalidArgument on
    /// vertices out of range.
    Clutter(std::size_t num_vertices, std::vector<VertexSet> edges);

    std::size_t num_vertices() const noexcept { return n_; }
    const std::vector<VertexSet>& edges() const& noexcept { return edges_; }
    std::vector<VertexSet> edges() && noexcept { return std::move(edges_); }
    bool is_trivial() const noexcept { return edges_.size() == 1 && edges_.front() == 0; }

    friend bool operator==(const Clutter&, const Clutter&) = default;

private:
    std::size_t n_ = 0;
    std::vector<VertexSet> edges_;
};

/// Simple graph on {0,…,n−1}.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t num_vertices);
    /// Throws InvalidArgument on loops, repeated edges, or vertices out of range.
    Graph(std::size_t num_vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t num_vertices() const noexcept { return adj_.size(); }
    std::size_t num_edges() const;
    VertexSet neighbors(std::size_t v) const { return adj_.at(v); }
    bool adjacent(std::size_t u, std::size_t v) const { return (adj_.at(u) >> v) & 1u; }
    /// N_G(S): vertices adjacent to some vertex of S.
    VertexSet neighbors_of(VertexSet s) const;
    /// Edges (u,v) with u < v in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edge_list() const;
    Clutter clutter() const;
    /// Subgraph induced on V \ removed, relabelled in increasing order.
    Graph remove(VertexSet removed) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adj_;
};

MonomialIdeal edge_ideal(const Clutter& C);
MonomialIdeal edge_ideal(const Graph& G);

/// Clutter of minimal vertex covers.
Clutter blocker(const Clutter& C);
MonomialIdeal cover_ideal(const Clutter& C);
MonomialIdeal cover_ideal(const Graph& G);

/// C ∖ v: edges avoiding v, on V ∖ {v} relabelled.
Clutter deletion(const Clutter& C, std::size_t v);
/// C / v: minimal elements of {e ∖ {v}}, on V ∖ {v} relabelled.
Clutter contraction(const Clutter& C, std::size_t v);

struct MinorScanReport {
    bool base_normal = false;
    std::size_t minors_checked = 0;
    /// Descriptions of minors whose ideal of covers is not normal although
    /// the base one is.
    std::vector<std::string> violations;
};

/// When I_c(C) is normal, checks I_c(H) for every minor H reachable by at
/// most `depth` deletions and contractions.
MinorScanReport minor_normality_scan(const Clutter& C, int depth, const Budget& budget = {});

Graph complement(const Graph& G);
/// Maximal cliques (Bron–Kerbosch with pivoting).
Clutter clique_clutter(const Graph& G);
/// I_c(G) computed as I(cl(Ḡ))*.
MonomialIdeal cover_ideal_via_cliques(const Graph& G);
std::size_t independence_number(const Graph& G);

struct Component {
    Graph graph;
    /// Original labels of the component's vertices, increasing.
    std::vector<std::size_t> vertices;
};

/// Components in order of their smallest vertex.
std::vector<Component> connected_components(const Graph& G);

/// Adds vertex n joined to every vertex of G.
Graph cone_over(const Graph& G);

/// Cycle as a vertex sequence: starts at its smallest vertex and the second
/// vertex is smaller than the last.
using Cycle = std::vector<std::size_t>;

std::string cycle_to_string(const Cycle& c);

/// All chordless odd cycles of length ≤ max_len, sorted by length then
/// lexicographically.
std::vector<Cycle> induced_odd_cycles(const Graph& G, std::size_t max_len);

struct HochsterConfig {
    Cycle cycle1;
    Cycle cycle2;
};

/// Whether C1 ∩ N_G(C2) = ∅.
bool hochster_condition(const Graph& G, const Cycle& c1, const Cycle& c2);

/// Unordered pairs of induced odd cycles satisfying the neighbourhood
/// condition in either order.
std::vector<HochsterConfig> hochster_configurations(const Graph& G, std::size_t min_len = 3);

/// I(G) normal ⇔ G has no Hochster configuration.
bool edge_ideal_normality_combinatorial(const Graph& G);

struct MMonomial {
    Exponent exponent;
    int level = 0;
};

/// (∏_{C1} t_i ∏_{C2} t_i) at level (|C1|+|C2|)/2. Throws InvalidArgument for
/// even cycles or cycles sharing more than one vertex.
MMonomial m_monomial(std::size_t num_vertices, const Cycle& c1, const Cycle& c2);

/// Whether N_G(v) is a minimal vertex cover of G.
bool neighbors_form_minimal_cover(const Graph& G, std::size_t v);

struct ReductionReport {
    /// Removed vertices in order, as labels of the input graph.
    std::vector<std::size_t> chain;
    Graph residual;
    std::vector<std::size_t> residual_vertices;
    /// Normality of I_c(residual) by the Rees route, if it fit the budget.
    std::optional<bool> residual_normal;
    /// Normality of I_c(G): set when the chain is nonempty and the residual
    /// was decided.
    std::optional<bool> verdict;
};

/// Repeatedly deletes the smallest vertex whose neighbour set is a minimal
/// vertex cover; I_c-normality is preserved at every step.
ReductionReport neighbor_mvc_reduction(const Graph& G, const Budget& budget = {});

struct DualityReport {
    bool cover_ideal_normal = false;
    std::size_t independence_number = 0;
    std::vector<HochsterConfig> complement_configurations;
};

/// For β₀(G) ≤ 2: I_c(G) normal ⇔ Ḡ has no Hochster configuration.
/// Throws UnsupportedInput when β₀(G) > 2.
DualityReport duality_criterion(const Graph& G);

struct NecessaryConditionReport {
    /// false when I_c(G) is certainly not normal; nullopt when inconclusive.
    std::optional<bool> normal;
    std::optional<HochsterConfig> configuration;
};

/// I_c(G) normal ⇒ Ḡ has no Hochster configuration with both cycles of
/// length at least 5.
NecessaryConditionReport necessary_condition_check(const Graph& G);

}  // namespace nmi
