#pragma once

#include <cstddef>
#include <vector>

#include "int_arith.hpp"
#include "nmi/budget.hpp"

namespace nmi::detail {

/// Placing triangulation of a full-dimensional pointed cone.
struct Triangulation {
    /// Each simplex lists `dim` generator indices.
    std::vector<std::vector<std::size_t>> simplices;
    /// Primitive inward normals of the cone's facets, deduplicated and sorted.
    std::vector<IntVec> facets;
};

/// Triangulates cone(gens) by inserting generators in order and coning each
/// new generator over the boundary faces it sees. Requires the generators
/// to span ℝ^dim.
Triangulation triangulate(const std::vector<IntVec>& gens, std::size_t dim, const Budget& budget);

/// Nonzero lattice points Σ λ_i g_i with 0 ≤ λ_i < 1 for the simplex
/// spanned by `rows` (linearly independent).
std::vector<IntVec> parallelepiped_points(const std::vector<IntVec>& rows, const Budget& budget);

}  // namespace nmi::detail
