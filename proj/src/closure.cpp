#include "nmi/closure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nmi/cone.hpp"

namespace nmi {

using lp::QMatrix;
using lp::QVector;
using lp::Rational;

namespace {

bool lex_less(const QVector& a, const QVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

QVector ones(std::size_t n) {
    QVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1;
    return v;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

// Vertices scaled to a common denominator, for integer membership tests.
struct ScaledVertices {
    std::vector<std::vector<long>> numerators;
    std::vector<long> denominators;

    explicit ScaledVertices(const std::vector<QVector>& vertices) {
        for (const auto& u : vertices) {
            mpz_class l = 1;
            for (const auto& e : u) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
            std::vector<long> num;
            for (const auto& e : u) num.push_back(mpz_class(e.get_num() * (l / e.get_den())).get_si());
            numerators.push_back(std::move(num));
            denominators.push_back(l.get_si());
        }
    }

    // ⟨a,u⟩ ≥ n for every vertex u.
    bool member(const std::vector<int>& a, int n) const {
        for (std::size_t v = 0; v < numerators.size(); ++v) {
            __int128 acc = 0;
            for (std::size_t j = 0; j < a.size(); ++j) acc += static_cast<__int128>(a[j]) * numerators[v][j];
            if (acc < static_cast<__int128>(n) * denominators[v]) return false;
        }
        return true;
    }
};

}  // namespace

CoveringPolyhedron covering_vertices(const MonomialIdeal& I, const Budget& budget) {
    if (!I.is_proper())
        throw UnsupportedInput(std::string("covering polyhedron of the ") + to_string(I.kind()) + " ideal");
    CoveringPolyhedron P;
    P.ideal = I;
    const std::size_t s = I.num_vars();
    for (std::size_t j = 0; j < s; ++j) {
        bool used = std::any_of(I.gens().begin(), I.gens().end(), [&](const Exponent& g) { return g[j] > 0; });
        if (used) P.supported_vars.push_back(j);
    }
    const std::size_t k = P.supported_vars.size();
    const std::size_t q = I.num_gens();
    // Constraint rows over the supported variables: x_j ≥ 0, then ⟨v_i,x⟩ ≥ 1.
    const std::size_t m = k + q;
    QMatrix rows(m, k);
    QVector rhs(m);
    for (std::size_t j = 0; j < k; ++j) rows(j, j) = 1;
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < k; ++j) rows(k + i, j) = I.gens()[i][P.supported_vars[j]];
        rhs[k + i] = 1;
    }
    budget.require_points(binomial(m, k), "covering polyhedron vertex enumeration");

    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    std::vector<QVector> found;
    std::uint64_t visited = 0;
    while (true) {
        if (++visited % 1024 == 0) budget.check_time("covering polyhedron vertex enumeration");
        QMatrix M(k, k);
        QVector b(k);
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) M(r, c) = rows(pick[r], c);
            b[r] = rhs[pick[r]];
        }
        if (auto x = lp::solve_square(M, b)) {
            bool feasible = true;
            for (std::size_t r = 0; r < m && feasible; ++r) {
                Rational lhs = 0;
                for (std::size_t c = 0; c < k; ++c) lhs += rows(r, c) * (*x)[c];
                feasible = lhs >= rhs[r];
            }
            if (feasible) {
                QVector full(s);
                for (std::size_t c = 0; c < k; ++c) full[P.supported_vars[c]] = (*x)[c];
                found.push_back(std::move(full));
            }
        }
        // Next k-subset of {0,…,m−1} in lexicographic order.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(found.begin(), found.end(), lex_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    P.vertices = std::move(found);
    return P;
}

MembershipVerdict closure_membership(const MonomialIdeal& I, const Exponent& a, int n) {
    if (n < 1) throw InvalidArgument("closure_membership: n must be at least 1");
    if (a.num_vars() != I.num_vars()) throw InvalidArgument("closure_membership: arity mismatch");
    MembershipVerdict v;
    if (I.kind() == IdealKind::zero) {
        v.member = false;
        v.lp_value = 0;
        return v;
    }
    if (I.kind() == IdealKind::unit) {
        // The LP is unbounded; n copies of the zero generator certify membership.
        v.member = true;
        v.lp_value = n;
        v.witness = QVector{Rational(n)};
        return v;
    }
    const QMatrix A = incidence_matrix(I);
    auto sol = lp::lp_max(A, a.to_qvector(), ones(I.num_gens()));
    if (sol.status != lp::LPStatus::optimal) throw std::logic_error("membership LP is not bounded and feasible");
    v.lp_value = *sol.value;
    v.member = v.lp_value >= n;
    if (v.member) {
        Rational scale = Rational(n) / v.lp_value;
        QVector lambda = *sol.primal;
        for (std::size_t i = 0; i < lambda.dim(); ++i) lambda[i] *= scale;
        v.witness = std::move(lambda);
    } else {
        v.witness = *sol.dual;
    }
    return v;
}

bool verify_membership(const MonomialIdeal& I, const Exponent& a, int n, const MembershipVerdict& v) {
    if (I.kind() == IdealKind::zero) return !v.member;
    if (I.kind() == IdealKind::unit) return v.member;
    const QMatrix A = incidence_matrix(I);
    const QVector alpha = a.to_qvector();
    if (v.member) {
        if (v.witness.dim() != I.num_gens() || !v.witness.is_nonnegative()) return false;
        if (v.witness.sum() != n) return false;
        QVector Al = A * v.witness;
        for (std::size_t i = 0; i < Al.dim(); ++i)
            if (Al[i] > alpha[i]) return false;
        return true;
    }
    if (v.witness.dim() != I.num_vars() || !v.witness.is_nonnegative()) return false;
    QVector xA = A.left_multiply(v.witness);
    for (std::size_t j = 0; j < xA.dim(); ++j)
        if (xA[j] < 1) return false;
    return alpha.dot(v.witness) == v.lp_value && v.lp_value < n;
}

bool min_generator_test(const MonomialIdeal& I, const Exponent& a, int n) {
    if (!closure_membership(I, a, n).member) return false;
    for (std::size_t i = 0; i < a.num_vars(); ++i) {
        if (a[i] == 0) continue;
        Exponent b = a;
        --b[i];
        if (closure_membership(I, b, n).member) return false;
    }
    return true;
}

MonomialIdeal closure_generators(const MonomialIdeal& I, int n, const Budget& budget) {
    if (n < 1) throw InvalidArgument("closure_generators: n must be at least 1");
    if (!I.is_proper()) return I;  // the zero and unit ideals are their own closures
    const std::size_t s = I.num_vars();
    // If a/n ∈ NP(I) then a/n ≥ Σλ_i v_i with Σλ_i = 1, whose j-th entry is
    // at most max_i (v_i)_j. So a_j > n·max_i (v_i)_j leaves a − e_j in
    // the closure, and minimal generators lie in the box below.
    std::vector<int> bound(s, 0);
    for (const auto& g : I.gens())
        for (std::size_t j = 0; j < s; ++j) bound[j] = std::max(bound[j], n * g[j]);
    std::uint64_t box = 1;
    for (int b : bound) {
        if (box > UINT64_MAX / (static_cast<std::uint64_t>(b) + 1)) {
            box = UINT64_MAX;
            break;
        }
        box *= static_cast<std::uint64_t>(b) + 1;
    }
    budget.require_points(box, "closure generator box");

    const CoveringPolyhedron P = covering_vertices(I, budget);
    const ScaledVertices V(P.vertices);

    std::vector<Exponent> gens;
    std::vector<int> a(s, 0);
    std::uint64_t visited = 0;
    while (true) {
        if (++visited % 65536 == 0) budget.check_time("closure generator box");
        if (V.member(a, n)) {
            bool minimal = true;
            for (std::size_t j = 0; j < s && minimal; ++j) {
                if (a[j] == 0) continue;
                --a[j];
                minimal = !V.member(a, n);
                ++a[j];
            }
            if (minimal) gens.emplace_back(a);
        }
        std::size_t j = 0;
        while (j < s && a[j] == bound[j]) a[j++] = 0;
        if (j == s) break;
        ++a[j];
    }
    MonomialIdeal out = make_ideal(s, std::move(gens));
    // Independent re-check of every generator through the LP test.
    for (const auto& g : out.gens())
        if (!min_generator_test(I, g, n)) throw std::logic_error("closure generator failed the LP re-check");
    return out;
}

bool scaled_power_law(const MonomialIdeal& I, int n, const Budget& budget) {
    if (!I.is_proper()) return true;
    std::vector<Exponent> scaled;
    for (const auto& g : I.gens()) scaled.push_back(g.scaled(n));
    const MonomialIdeal J = make_ideal(I.num_vars(), std::move(scaled));
    return closure_generators(I, n, budget) == closure_generators(J, 1, budget);
}

PowersReport normality_via_powers(const MonomialIdeal& I, int n_max, const Budget& budget) {
    if (n_max < 1) throw InvalidArgument("normality_via_powers: n_max must be at least 1");
    PowersReport report;
    if (!I.is_proper()) {
        report.checked_up_to = n_max;
        return report;
    }
    MonomialIdeal In = unit_ideal(I.num_vars());
    for (int n = 1; n <= n_max; ++n) {
        In = product(In, I);
        const MonomialIdeal closed = closure_generators(I, n, budget);
        report.checked_up_to = n;
        if (closed == In) continue;
        report.failing_n = n;
        for (const auto& g : closed.gens()) {
            if (!In.contains(g)) {
                report.witness = g;
                break;
            }
        }
        return report;
    }
    return report;
}

bool irp_ge(const MonomialIdeal& I, const Budget& budget) {
    if (!I.is_proper()) throw UnsupportedInput("integer rounding needs a proper ideal");
    return normality_via_rees(I, budget).normal;
}

MonomialIdeal ideal_from_columns(const QMatrix& A) {
    std::vector<Exponent> cols;
    for (std::size_t c = 0; c < A.cols(); ++c) {
        std::vector<int> e(A.rows());
        for (std::size_t r = 0; r < A.rows(); ++r) {
            const Rational& x = A(r, c);
            if (!lp::is_integer(x) || sgn(x) < 0 || !x.get_num().fits_sint_p())
                throw InvalidArgument("matrix entries must be natural numbers");
            e[r] = static_cast<int>(x.get_num().get_si());
        }
        cols.emplace_back(std::move(e));
    }
    for (const auto& c : cols)
        if (c.is_zero()) throw InvalidArgument("matrix has a zero column");
    MonomialIdeal I = make_ideal(A.rows(), cols);
    if (I.num_gens() != cols.size())
        throw InvalidArgument("matrix columns are repeated or comparable, so they are not minimal generators");
    return I;
}

IrpLeReport irp_le(const QMatrix& A, const Budget& budget) {
    IrpLeReport report;
    bool zero_one = true;
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c)
            if (A(r, c) != 0 && A(r, c) != 1) zero_one = false;

    if (zero_one) {
        QMatrix star(A.rows(), A.cols());
        for (std::size_t r = 0; r < A.rows(); ++r)
            for (std::size_t c = 0; c < A.cols(); ++c) star(r, c) = 1 - A(r, c);
        try {
            report.duality_route = normality_via_rees(ideal_from_columns(star), budget).normal;
        } catch (const InvalidArgument&) {
        }
    }
    bool degree_two = A.cols() > 0;
    for (std::size_t c = 0; c < A.cols() && degree_two; ++c) degree_two = A.column(c).sum() == 2;
    if (degree_two) {
        try {
            report.hilbert_basis_route = normality_via_bset(ideal_from_columns(A), budget).normal;
        } catch (const InvalidArgument&) {
        }
    }
    if (!report.duality_route && !report.hilbert_basis_route)
        throw UnsupportedInput(
            "integer rounding of x >= 0, xA <= 1 is decided only for 0/1 matrices whose complement columns "
            "are minimal generators, or for incidence matrices of degree-2 ideals");
    if (report.duality_route && report.hilbert_basis_route &&
        *report.duality_route != *report.hilbert_basis_route)
        throw std::logic_error("integer rounding routes disagree");
    report.holds = report.duality_route ? *report.duality_route : *report.hilbert_basis_route;
    return report;
}

MonomialIdeal intersection(const MonomialIdeal& I1, const MonomialIdeal& I2) {
    if (I1.num_vars() != I2.num_vars()) throw InvalidArgument("intersection: ideals live in different rings");
    std::vector<Exponent> raw;
    for (const auto& g : I1.gens()) {
        for (const auto& h : I2.gens()) {
            Exponent m(I1.num_vars());
            for (std::size_t i = 0; i < m.num_vars(); ++i) m[i] = std::max(g[i], h[i]);
            raw.push_back(std::move(m));
        }
    }
    return make_ideal(I1.num_vars(), std::move(raw));
}

DisjointProductReport disjoint_product_normality(const MonomialIdeal& I1, const MonomialIdeal& I2,
                                                 const Budget& budget) {
    if (!disjoint_supports(I1, I2)) throw InvalidArgument("ideals share a variable");
    DisjointProductReport report;
    report.normal_1 = normality_via_rees(I1, budget).normal;
    report.normal_2 = normality_via_rees(I2, budget).normal;
    report.normal = report.normal_1 && report.normal_2;
    const MonomialIdeal prod = product(I1, I2);
    report.product_is_intersection = prod == intersection(I1, I2);
    try {
        report.closure_of_product =
            closure_generators(prod, 1, budget) ==
            product(closure_generators(I1, 1, budget), closure_generators(I2, 1, budget));
    } catch (const BudgetExceeded&) {
    }
    return report;
}

int integer_packing(const MonomialIdeal& I, const Exponent& a) {
    if (I.kind() == IdealKind::zero) return 0;
    if (I.kind() == IdealKind::unit) throw UnsupportedInput("packing number of the unit ideal is unbounded");
    auto v = closure_membership(I, a, 1);
    Rational top = lp::floor(v.lp_value);
    for (long n = top.get_num().get_si(); n > 0; --n)
        if (power_membership(I, a, static_cast<int>(n))) return static_cast<int>(n);
    return 0;
}

int integer_covering(const MonomialIdeal& I, const Exponent& a, const Budget& budget) {
    if (!I.is_proper()) throw UnsupportedInput("covering number needs a proper ideal");
    const auto& gens = I.gens();
    const QMatrix A = incidence_matrix(I);
    auto sol = lp::lp_min(A, a.to_qvector(), ones(I.num_gens()));
    if (sol.status != lp::LPStatus::optimal) throw UnsupportedInput("covering program is infeasible");
    long max_degree = 0;
    for (const auto& g : gens) max_degree = std::max(max_degree, g.degree());
    std::uint64_t nodes = 0;

    // Is there a multiset of `left` generators (indices < limit) whose sum
    // covers the deficit?
    auto cover = [&](auto&& self, std::vector<int>& deficit, int left, std::size_t limit) -> bool {
        long need = 0;
        for (int d : deficit) need += std::max(d, 0);
        if (need == 0) return true;
        if (left == 0 || need > left * max_degree) return false;
        if (++nodes % 4096 == 0) {
            budget.check_time("integer covering search");
            budget.require_points(nodes, "integer covering search");
        }
        for (std::size_t i = limit; i-- > 0;) {
            bool helps = false;
            for (std::size_t j = 0; j < deficit.size() && !helps; ++j) helps = gens[i][j] > 0 && deficit[j] > 0;
            if (!helps) continue;
            for (std::size_t j = 0; j < deficit.size(); ++j) deficit[j] -= gens[i][j];
            bool ok = self(self, deficit, left - 1, i + 1);
            for (std::size_t j = 0; j < deficit.size(); ++j) deficit[j] += gens[i][j];
            if (ok) return true;
        }
        return false;
    };
    for (long n = lp::ceil(*sol.value).get_num().get_si();; ++n) {
        std::vector<int> deficit = a.entries();
        if (cover(cover, deficit, static_cast<int>(n), gens.size())) return static_cast<int>(n);
    }
}

std::optional<IrpCounterexample> irp_falsify_scan(const MonomialIdeal& I, IrpDirection direction, int box,
                                                  const Budget& budget) {
    if (!I.is_proper()) throw UnsupportedInput("integer rounding needs a proper ideal");
    if (box < 0) throw InvalidArgument("falsify box must be nonnegative");
    const std::size_t s = I.num_vars();
    std::uint64_t points = 1;
    for (std::size_t j = 0; j < s; ++j) {
        if (points > UINT64_MAX / (static_cast<std::uint64_t>(box) + 1)) {
            points = UINT64_MAX;
            break;
        }
        points *= static_cast<std::uint64_t>(box) + 1;
    }
    budget.require_points(points, "rounding falsification box");
    const QMatrix A = incidence_matrix(I);
    std::vector<int> a(s, 0);
    while (true) {
        budget.check_time("rounding falsification box");
        Exponent alpha(a);
        if (direction == IrpDirection::ge) {
            auto v = closure_membership(I, alpha, 1);
            int integral = integer_packing(I, alpha);
            if (lp::floor(v.lp_value) != integral) return IrpCounterexample{alpha, v.lp_value, integral};
        } else {
            auto sol = lp::lp_min(A, alpha.to_qvector(), ones(I.num_gens()));
            if (sol.status == lp::LPStatus::optimal) {
                int integral = integer_covering(I, alpha, budget);
                if (lp::ceil(*sol.value) != integral) return IrpCounterexample{alpha, *sol.value, integral};
            }
        }
        std::size_t j = 0;
        while (j < s && a[j] == box) a[j++] = 0;
        if (j == s) break;
        ++a[j];
    }
    return std::nullopt;
}

}  // namespace nmi
