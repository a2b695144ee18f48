#pragma once

// Checked 64-bit lattice arithmetic for the cone engine. Overflow raises
// BudgetExceeded rather than wrapping.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "nmi/errors.hpp"

namespace nmi::detail {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

[[noreturn]] inline void overflow() {
    throw BudgetExceeded("64-bit integer overflow in lattice arithmetic");
}

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) overflow();
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) overflow();
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) overflow();
    return r;
}

inline Int narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) overflow();
    return static_cast<Int>(v);
}

inline Int dot(const IntVec& a, const IntVec& b) {
    __int128 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<__int128>(a[i]) * b[i];
    return narrow(acc);
}

inline Int floor_mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

/// Divides out the gcd of the entries (no-op on the zero vector).
inline void make_primitive(IntVec& v) {
    Int g = 0;
    for (Int e : v) g = std::gcd(g, e < 0 ? -e : e);
    if (g > 1)
        for (Int& e : v) e /= g;
}

/// Fraction-free Gauss-Jordan on a square matrix given by rows.
/// Returns det(M) and fills `adj` with the adjugate, so M·adj = det·I.
/// When M is singular the determinant is 0 and `adj` is unspecified.
Int determinant_and_adjugate(const std::vector<IntVec>& rows, std::vector<IntVec>& adj);

/// Rank over ℚ.
std::size_t rank(const std::vector<IntVec>& rows, std::size_t dim);

/// Basis of the lattice ℤ^dim ∩ span(rows), one basis vector per entry.
std::vector<IntVec> saturated_basis(const std::vector<IntVec>& rows, std::size_t dim);

/// Integer coordinates of `x` in the lattice basis `basis`, or nullopt when
/// x is not an integer combination of it.
std::optional<IntVec> lattice_coordinates(const std::vector<IntVec>& basis, const IntVec& x);

}  // namespace nmi::detail
