#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nmi/budget.hpp"
#include "nmi/exact_lp.hpp"
#include "nmi/ideal.hpp"

namespace nmi {

/// 𝒬(I) = {x ≥ 0 : xA ≥ 1} with its vertex list.
///
/// Variables that occur in no generator are unconstrained recession
/// directions; vertices carry 0 in those coordinates.
struct CoveringPolyhedron {
    MonomialIdeal ideal;
    std::vector<std::size_t> supported_vars;
    /// Canonical (lexicographic) order, pairwise distinct.
    std::vector<lp::QVector> vertices;
};

/// Enumerates the vertices of 𝒬(I) over all square subsystems of the
/// constraints restricted to the supported variables.
CoveringPolyhedron covering_vertices(const MonomialIdeal& I, const Budget& budget = {});

struct MembershipVerdict {
    bool member = false;
    /// max{⟨y,1⟩ : y ≥ 0, Ay ≤ a}.
    lp::Rational lp_value;
    /// λ with Aλ ≤ a and ⟨λ,1⟩ = n when member (scaled down from the
    /// optimum); otherwise x ∈ 𝒬(I) with ⟨a,x⟩ = lp_value < n.
    lp::QVector witness;
};

/// t^a ∈ closure(I^n) ⇔ max{⟨y,1⟩ : y ≥ 0, Ay ≤ a} ≥ n.
MembershipVerdict closure_membership(const MonomialIdeal& I, const Exponent& a, int n);

/// Re-checks a verdict by arithmetic alone.
bool verify_membership(const MonomialIdeal& I, const Exponent& a, int n, const MembershipVerdict& v);

/// t^a is a minimal generator of closure(I^n): a is in it and no a − e_i is.
bool min_generator_test(const MonomialIdeal& I, const Exponent& a, int n);

/// Minimal generators of closure(I^n) by scanning the box
/// 0 ≤ a_j ≤ n·max_i (v_i)_j against the vertices of 𝒬(I).
MonomialIdeal closure_generators(const MonomialIdeal& I, int n, const Budget& budget = {});

/// Checks closure(I^n) = closure((t^{n v_1},…,t^{n v_q})) by computing both sides.
bool scaled_power_law(const MonomialIdeal& I, int n, const Budget& budget = {});

struct PowersReport {
    /// First n with I^n ≠ closure(I^n), if any up to `checked_up_to`.
    std::optional<int> failing_n;
    std::optional<Exponent> witness;
    int checked_up_to = 0;
};

/// Compares I^n with closure(I^n) for n = 1..n_max. A clean report is not
/// a proof of normality.
PowersReport normality_via_powers(const MonomialIdeal& I, int n_max, const Budget& budget = {});

/// Integer rounding property of x ≥ 0, xA ≥ 1 for the incidence matrix A
/// of I, decided as normality of I.
bool irp_ge(const MonomialIdeal& I, const Budget& budget = {});

struct IrpLeReport {
    bool holds = false;
    /// Normality of the ideal with incidence matrix A* = 1 − A.
    std::optional<bool> duality_route;
    /// Whether ℬ of the degree-2 ideal with incidence matrix A is a Hilbert basis.
    std::optional<bool> hilbert_basis_route;
};

/// Integer rounding property of x ≥ 0, xA ≤ 1. Uses every applicable
/// route and throws std::logic_error if they disagree; throws
/// UnsupportedInput when neither applies.
IrpLeReport irp_le(const lp::QMatrix& A, const Budget& budget = {});

/// Ideal whose generators are the columns of a natural-number matrix.
/// Throws InvalidArgument unless the columns are distinct, nonzero and
/// pairwise incomparable.
MonomialIdeal ideal_from_columns(const lp::QMatrix& A);

struct DisjointProductReport {
    bool normal = false;
    bool normal_1 = false;
    bool normal_2 = false;
    /// I1·I2 = I1 ∩ I2 on generators.
    bool product_is_intersection = false;
    /// closure(I1·I2) = closure(I1)·closure(I2), when the closures fit the budget.
    std::optional<bool> closure_of_product;
};

/// Normality of I1·I2 for ideals in disjoint variables, as
/// normal(I1) ∧ normal(I2). Throws InvalidArgument on overlapping supports.
DisjointProductReport disjoint_product_normality(const MonomialIdeal& I1, const MonomialIdeal& I2,
                                                 const Budget& budget = {});

/// Minimal generators of I1 ∩ I2 (componentwise max of generator pairs).
MonomialIdeal intersection(const MonomialIdeal& I1, const MonomialIdeal& I2);

/// max{⟨y,1⟩ : y ∈ ℕ^q, Ay ≤ a}: the largest n with t^a ∈ I^n.
int integer_packing(const MonomialIdeal& I, const Exponent& a);

/// min{⟨y,1⟩ : y ∈ ℕ^q, Ay ≥ a} for a proper ideal.
int integer_covering(const MonomialIdeal& I, const Exponent& a, const Budget& budget = {});

enum class IrpDirection { ge, le };

/// A right-hand side α where the two sides of the rounding equation differ.
struct IrpCounterexample {
    Exponent alpha;
    lp::Rational lp_value;
    int integer_value = 0;
};

/// Scans every α in [0, box]^s and compares the rounded LP optimum with the
/// integer optimum. Finding nothing proves nothing beyond the box.
std::optional<IrpCounterexample> irp_falsify_scan(const MonomialIdeal& I, IrpDirection direction, int box,
                                                  const Budget& budget = {});

}  // namespace nmi
