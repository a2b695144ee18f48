#include "int_arith.hpp"

#include <utility>

#include "nmi/exact_lp.hpp"

namespace nmi::detail {

Int determinant_and_adjugate(const std::vector<IntVec>& rows, std::vector<IntVec>& adj) {
    const std::size_t n = rows.size();
    // Work on [M | I]; Bareiss keeps every entry a minor of the augmented
    // matrix, so the left block ends as det·I and the right block as adj(M)
    // up to the sign picked up by row swaps.
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
        a[i][n + i] = 1;
    }
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                __int128 v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = v / prev;
                narrow(a[i][j]);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    // The swaps act on the augmented matrix, so the right block is
    // det(P·M)·M⁻¹ = sign·adj(M), where P is the accumulated permutation.
    const Int det_perm = narrow(a[0][0]);
    adj.assign(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) adj[i][j] = narrow(a[i][n + j] * sign);
    return det_perm * sign;
}

std::size_t rank(const std::vector<IntVec>& rows, std::size_t dim) {
    std::vector<std::vector<__int128>> a;
    a.reserve(rows.size());
    for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
    std::size_t rk = 0;
    for (std::size_t c = 0; c < dim && rk < a.size(); ++c) {
        std::size_t piv = rk;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rk]);
        for (std::size_t r = rk + 1; r < a.size(); ++r) {
            if (a[r][c] == 0) continue;
            __int128 f = a[r][c], p = a[rk][c];
            __int128 g = 0;
            for (std::size_t k = c; k < dim; ++k) {
                a[r][k] = a[r][k] * p - f * a[rk][k];
                __int128 x = a[r][k] < 0 ? -a[r][k] : a[r][k];
                // Keep rows small by dividing out their content.
                while (x) {
                    __int128 t = g % x;
                    g = x;
                    x = t;
                }
            }
            if (g > 1)
                for (std::size_t k = c; k < dim; ++k) a[r][k] /= g;
            for (std::size_t k = c; k < dim; ++k) narrow(a[r][k]);
        }
        ++rk;
    }
    return rk;
}

namespace {

// Rational basis of {z : ⟨row, z⟩ = 0 for every row}, scaled to primitive
// integer vectors.
std::vector<IntVec> orthogonal_complement(const std::vector<IntVec>& rows, std::size_t dim) {
    std::vector<std::vector<lp::Rational>> a;
    for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
    std::vector<std::size_t> pivots;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < dim && rk < a.size(); ++c) {
        std::size_t piv = rk;
        while (piv < a.size() && sgn(a[piv][c]) == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rk]);
        lp::Rational inv = 1 / a[rk][c];
        for (auto& e : a[rk]) e *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rk || sgn(a[r][c]) == 0) continue;
            lp::Rational f = a[r][c];
            for (std::size_t k = 0; k < dim; ++k) a[r][k] -= f * a[rk][k];
        }
        pivots.push_back(c);
        ++rk;
    }
    std::vector<IntVec> out;
    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        std::vector<lp::Rational> z(dim, 0);
        z[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) z[pivots[i]] = -a[i][free];
        mpz_class l = 1;
        for (const auto& e : z) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
        IntVec v(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            mpz_class n = z[k].get_num() * (l / z[k].get_den());
            if (!n.fits_slong_p()) overflow();
            v[k] = n.get_si();
        }
        make_primitive(v);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<IntVec> saturated_basis(const std::vector<IntVec>& rows, std::size_t dim) {
    std::vector<IntVec> normals = orthogonal_complement(rows, dim);
    if (normals.empty()) {
        std::vector<IntVec> id(dim, IntVec(dim, 0));
        for (std::size_t i = 0; i < dim; ++i) id[i][i] = 1;
        return id;
    }
    // Column operations bring the normal matrix N to echelon form N·U with
    // U unimodular; the trailing columns of U then span ker N ∩ ℤ^dim.
    const std::size_t k = normals.size();
    std::vector<IntVec> A = normals;
    std::vector<IntVec> U(dim, IntVec(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) U[i][i] = 1;
    auto col_axpy = [&](std::size_t dst, std::size_t src, Int q) {
        for (auto& row : A) row[dst] = sub(row[dst], mul(q, row[src]));
        for (auto& row : U) row[dst] = sub(row[dst], mul(q, row[src]));
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (auto& row : A) std::swap(row[x], row[y]);
        for (auto& row : U) std::swap(row[x], row[y]);
    };
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            while (A[i][j] != 0) {
                Int q = A[i][i] / A[i][j];
                col_axpy(i, j, q);
                col_swap(i, j);
            }
        }
        if (A[i][i] == 0) throw InvalidArgument("saturated_basis: dependent normals");
    }
    std::vector<IntVec> basis;
    for (std::size_t j = k; j < dim; ++j) {
        IntVec v(dim);
        for (std::size_t r = 0; r < dim; ++r) v[r] = U[r][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<IntVec> lattice_coordinates(const std::vector<IntVec>& basis, const IntVec& x) {
    const std::size_t r = basis.size();
    const std::size_t dim = x.size();
    // Solve Σ c_j basis_j = x over ℚ by elimination on the dim×(r+1)
    // augmented system, then demand integrality.
    std::vector<std::vector<lp::Rational>> a(dim, std::vector<lp::Rational>(r + 1));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < r; ++j) a[i][j] = basis[j][i];
        a[i][r] = x[i];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < r; ++c) {
        std::size_t piv = row;
        while (piv < dim && sgn(a[piv][c]) == 0) ++piv;
        if (piv == dim) throw InvalidArgument("lattice_coordinates: dependent basis");
        std::swap(a[piv], a[row]);
        lp::Rational inv = 1 / a[row][c];
        for (auto& e : a[row]) e *= inv;
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == row || sgn(a[i][c]) == 0) continue;
            lp::Rational f = a[i][c];
            for (std::size_t j = 0; j <= r; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
    }
    for (std::size_t i = row; i < dim; ++i)
        if (sgn(a[i][r]) != 0) return std::nullopt;
    IntVec out(r);
    for (std::size_t j = 0; j < r; ++j) {
        if (a[j][r].get_den() != 1) return std::nullopt;
        if (!a[j][r].get_num().fits_slong_p()) overflow();
        out[j] = a[j][r].get_num().get_si();
    }
    return out;
}

}  // namespace nmi::detail
