#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nmi/budget.hpp"
#include "nmi/exact_lp.hpp"
#include "nmi/ideal.hpp"

namespace nmi {

using IntVector = std::vector<std::int64_t>;

std::string to_string(const IntVector& v);

/// Pointed rational cone ℝ₊·generators in ℝ^dim with integer generators.
class IntegerCone {
public:
    /// Validates arity, rejects zero generators and non-pointed cones.
    IntegerCone(std::size_t dim, std::vector<IntVector> generators);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<IntVector>& generators() const& noexcept { return generators_; }
    std::vector<IntVector> generators() && noexcept { return std::move(generators_); }
    /// Integer functional that is at least 1 on every generator: the
    /// all-ones vector when it qualifies, otherwise one found by LP.
    const IntVector& grading() const noexcept { return grading_; }

private:
    std::size_t dim_;
    std::vector<IntVector> generators_;
    IntVector grading_;
};

struct HilbertBasisReport {
    /// Sorted by grading degree, then lexicographically.
    std::vector<IntVector> minimal_hb;
    bool input_is_hb = false;
    /// Smallest element of the minimal basis outside ℕ·generators.
    std::optional<IntVector> witness;
    /// Inward primitive facet normals of the cone, in the coordinates of the
    /// saturated lattice it spans (ambient coordinates when full-dimensional).
    std::vector<IntVector> facets;
    std::size_t simplices = 0;
    std::uint64_t parallelepiped_points = 0;
};

/// Unique minimal Hilbert basis of ℤ^dim ∩ cone, via a placing
/// triangulation and the lattice points of each simplex's fundamental
/// parallelepiped. A non-basis witness is re-verified before returning.
HilbertBasisReport hilbert_basis(const IntegerCone& C, const Budget& budget = {});

/// Cone over {e_1,…,e_s} ∪ {(v_i,1)} in ℝ^{s+1}.
IntegerCone rees_cone(const MonomialIdeal& I);

/// Cone over {e_{s+1}} ∪ {e_i + e_{s+1}} ∪ {(v_i,1)} in ℝ^{s+1}.
IntegerCone b_set(const MonomialIdeal& I);

/// Exact LP test for x ∈ ℝ₊·generators.
bool cone_contains(const IntegerCone& C, const IntVector& x);

/// Multiset of generator indices summing to x, or nullopt when x ∉ ℕ·generators.
std::optional<std::vector<std::size_t>> semigroup_membership(const IntegerCone& C, const IntVector& x,
                                                             const Budget& budget = {});

/// Normality verdict for a monomial ideal with its certificate.
struct NormalityReport {
    bool normal = false;
    /// "rees", "bset", or "convention" for the zero and unit ideals.
    std::string route;
    std::size_t hilbert_basis_size = 0;
    /// Hilbert-basis element outside the tested generator set.
    std::optional<IntVector> cone_witness;
    /// Non-normality certificate t^a ∈ closure(I^n) \ I^n.
    std::optional<Exponent> witness_monomial;
    int witness_power = 0;
    std::optional<lp::Rational> witness_lp_value;
    /// p with (t^a)^p ∈ I^{pn}, and the generator multiplicities realizing it.
    int scale_p = 0;
    std::vector<std::int64_t> scale_multiplicities;
};

/// I normal ⇔ the Rees-cone generators form a Hilbert basis.
NormalityReport normality_via_rees(const MonomialIdeal& I, const Budget& budget = {});

/// I normal ⇔ ℬ is a Hilbert basis. Only valid when every generator has
/// degree 2; otherwise throws UnsupportedInput.
NormalityReport normality_via_bset(const MonomialIdeal& I, const Budget& budget = {});

/// Normality of I* for the edge ideal I of a graph, decided as the
/// normality of I. Throws UnsupportedInput unless I is squarefree of degree 2.
bool dual_normality(const MonomialIdeal& I, const Budget& budget = {});

}  // namespace nmi
