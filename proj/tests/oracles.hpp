#pragma once

// Brute-force reference implementations used to check the library. They
// share no code with it beyond the value types, and favour obviousness over
// speed.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "nmi/combinatorics.hpp"
#include "nmi/exact_lp.hpp"
#include "nmi/ideal.hpp"

namespace oracle {

using Q = mpq_class;
using QRow = std::vector<Q>;

/// Solutions of the linear system M x = rhs by Gauss–Jordan elimination:
/// nullopt when inconsistent, otherwise the solution with free variables 0
/// and a flag telling whether it is unique.
struct SolveResult {
    QRow x;
    bool unique = false;
};

inline std::optional<SolveResult> solve(std::vector<QRow> M, QRow rhs) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows ? M[0].size() : 0;
    for (std::size_t r = 0; r < rows; ++r) M[r].push_back(rhs[r]);
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && M[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(M[p], M[r]);
        const Q inv = 1 / M[r][c];
        for (auto& e : M[r]) e *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            const Q f = M[i][c];
            for (std::size_t j = c; j <= cols; ++j) M[i][j] -= f * M[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (M[i][cols] != 0) return std::nullopt;
    SolveResult out{QRow(cols, 0), pivot_col.size() == cols};
    for (std::size_t i = 0; i < pivot_col.size(); ++i) out.x[pivot_col[i]] = M[i][cols];
    return out;
}

/// Calls f on every k-subset of {0,…,n−1} in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Optimum of max ⟨c,y⟩ (sense = +1, Ay ≤ b) or min ⟨c,y⟩ (sense = −1,
/// Ay ≥ b) over y ≥ 0 by enumerating basic feasible solutions. Only valid
/// when the optimum is attained; nullopt when the region has no vertex.
inline std::optional<Q> lp_by_vertices(const nmi::lp::QMatrix& A, const nmi::lp::QVector& b,
                                       const nmi::lp::QVector& c, int sense) {
    const std::size_t m = A.rows(), q = A.cols();
    // Constraint rows: A y (≤ or ≥) b, and y_j ≥ 0.
    std::vector<QRow> rows;
    QRow rhs;
    for (std::size_t i = 0; i < m; ++i) {
        QRow row(q);
        for (std::size_t j = 0; j < q; ++j) row[j] = A(i, j);
        rows.push_back(row);
        rhs.push_back(b[i]);
    }
    for (std::size_t j = 0; j < q; ++j) {
        QRow row(q, 0);
        row[j] = 1;
        rows.push_back(row);
        rhs.push_back(0);
    }
    std::optional<Q> best;
    for_each_subset(rows.size(), q, [&](const std::vector<std::size_t>& pick) {
        std::vector<QRow> M;
        QRow r;
        for (auto i : pick) {
            M.push_back(rows[i]);
            r.push_back(rhs[i]);
        }
        auto s = solve(M, r);
        if (!s || !s->unique) return;
        const QRow& y = s->x;
        for (std::size_t j = 0; j < q; ++j)
            if (y[j] < 0) return;
        for (std::size_t i = 0; i < m; ++i) {
            Q lhs = 0;
            for (std::size_t j = 0; j < q; ++j) lhs += A(i, j) * y[j];
            if (sense > 0 ? lhs > b[i] : lhs < b[i]) return;
        }
        Q value = 0;
        for (std::size_t j = 0; j < q; ++j) value += c[j] * y[j];
        if (!best || (sense > 0 ? value > *best : value < *best)) best = value;
    });
    return best;
}

/// Whether x is a nonnegative combination of `gens`, by Carathéodory: some
/// linearly independent subset expresses it with nonnegative coefficients.
inline bool in_cone(const std::vector<std::vector<long>>& gens, const std::vector<long>& x) {
    const std::size_t d = x.size();
    if (std::all_of(x.begin(), x.end(), [](long e) { return e == 0; })) return true;
    for (std::size_t k = 1; k <= std::min(d, gens.size()); ++k) {
        bool found = false;
        for_each_subset(gens.size(), k, [&](const std::vector<std::size_t>& pick) {
            if (found) return;
            std::vector<QRow> M(d, QRow(k));
            QRow rhs(d);
            for (std::size_t i = 0; i < d; ++i) {
                rhs[i] = x[i];
                for (std::size_t j = 0; j < k; ++j) M[i][j] = gens[pick[j]][i];
            }
            auto s = solve(M, rhs);
            if (!s || !s->unique) return;
            found = std::all_of(s->x.begin(), s->x.end(), [](const Q& v) { return v >= 0; });
        });
        if (found) return true;
    }
    return false;
}

/// Minimal Hilbert basis of a cone with nonnegative generators: scans every
/// lattice point of total degree ≤ max_degree in the cone and keeps those
/// that are not sums of two nonzero cone points.
inline std::vector<std::vector<long>> hilbert_basis_scan(const std::vector<std::vector<long>>& gens, long max_degree) {
    const std::size_t d = gens.front().size();
    std::vector<std::vector<long>> points;
    std::vector<long> x(d, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i == d) {
            if (left != max_degree && in_cone(gens, x)) points.push_back(x);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            x[i] = v;
            rec(i + 1, left - v);
        }
        x[i] = 0;
    };
    rec(0, max_degree);
    std::set<std::vector<long>> cone_points(points.begin(), points.end());
    std::vector<std::vector<long>> basis;
    for (const auto& p : points) {
        bool reducible = false;
        for (const auto& y : cone_points) {
            std::vector<long> z(d);
            bool ok = y != p;
            for (std::size_t i = 0; i < d && ok; ++i) {
                z[i] = p[i] - y[i];
                ok = z[i] >= 0;
            }
            if (ok && cone_points.count(z)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(p);
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

/// Whether x is a sum of generators with nonnegative integer coefficients.
inline bool in_semigroup(const std::vector<std::vector<long>>& gens, std::vector<long> x) {
    if (std::all_of(x.begin(), x.end(), [](long e) { return e == 0; })) return true;
    if (std::any_of(x.begin(), x.end(), [](long e) { return e < 0; })) return false;
    for (const auto& g : gens) {
        std::vector<long> y = x;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] -= g[i];
        if (in_semigroup(gens, y)) return true;
    }
    return false;
}

/// LP value max{⟨y,1⟩ : y ≥ 0, Ay ≤ a} by vertex enumeration.
inline Q closure_lp_value(const nmi::MonomialIdeal& I, const nmi::Exponent& a) {
    const auto A = nmi::incidence_matrix(I);
    return *lp_by_vertices(A, a.to_qvector(), nmi::lp::QVector(std::vector<Q>(I.num_gens(), Q(1))), +1);
}

/// Minimal generators of closure(I^n) from the box scan with LP membership
/// decided by vertex enumeration.
inline std::vector<nmi::Exponent> closure_generators(const nmi::MonomialIdeal& I, int n) {
    const std::size_t s = I.num_vars();
    std::vector<int> hi(s, 0);
    for (const auto& g : I.gens())
        for (std::size_t j = 0; j < s; ++j) hi[j] = std::max(hi[j], n * g[j]);
    std::vector<nmi::Exponent> members;
    std::vector<int> a(s, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == s) {
            nmi::Exponent e(a);
            if (closure_lp_value(I, e) >= n) members.push_back(e);
            return;
        }
        for (int v = 0; v <= hi[j]; ++v) {
            a[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
    std::vector<nmi::Exponent> minimal;
    for (const auto& x : members) {
        bool min = true;
        for (const auto& y : members)
            if (y != x && y.divides(x)) {
                min = false;
                break;
            }
        if (min) minimal.push_back(x);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

/// t^a ∈ I^n by trying every multiset of n generators.
inline bool in_power(const nmi::MonomialIdeal& I, const nmi::Exponent& a, int n) {
    std::function<bool(std::size_t, int, std::vector<int>)> rec = [&](std::size_t from, int left, std::vector<int> rest) {
        if (left == 0) return true;
        for (std::size_t i = from; i < I.num_gens(); ++i) {
            std::vector<int> r = rest;
            bool ok = true;
            for (std::size_t j = 0; j < r.size() && ok; ++j) ok = (r[j] -= I.gens()[i][j]) >= 0;
            if (ok && rec(i, left - 1, r)) return true;
        }
        return false;
    };
    return rec(0, n, a.entries());
}

/// Minimal transversals of a clutter by scanning all vertex subsets.
inline std::vector<nmi::VertexSet> blocker(std::size_t n, const std::vector<nmi::VertexSet>& edges) {
    std::vector<nmi::VertexSet> covers;
    for (nmi::VertexSet s = 0; s < (nmi::VertexSet{1} << n); ++s) {
        bool hits = std::all_of(edges.begin(), edges.end(), [&](nmi::VertexSet e) { return (e & s) != 0; });
        if (hits) covers.push_back(s);
    }
    std::vector<nmi::VertexSet> minimal;
    for (auto c : covers) {
        bool min = std::none_of(covers.begin(), covers.end(), [&](nmi::VertexSet d) { return d != c && (d & c) == d; });
        if (min) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

inline std::size_t independence_number(const nmi::Graph& G) {
    const std::size_t n = G.num_vertices();
    std::size_t best = 0;
    for (nmi::VertexSet s = 0; s < (nmi::VertexSet{1} << n); ++s) {
        bool stable = true;
        for (std::size_t v = 0; v < n && stable; ++v)
            if ((s >> v) & 1u) stable = (G.neighbors(v) & s) == 0;
        if (stable) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
    }
    return best;
}

inline nmi::Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return nmi::Graph(n, edges);
}

inline nmi::Graph graph_from(std::size_t n, const std::vector<std::pair<int, int>>& one_based) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto [u, v] : one_based) edges.emplace_back(u - 1, v - 1);
    return nmi::Graph(n, edges);
}

inline nmi::Graph cycle(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return nmi::Graph(n, edges);
}

}  // namespace oracle
