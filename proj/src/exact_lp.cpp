#include "nmi/exact_lp.hpp"

#include <algorithm>
#include <sstream>

#include "nmi/errors.hpp"

namespace nmi::lp {

Rational make_rational(long numerator, long denominator) {
    if (denominator == 0) throw InvalidArgument("zero denominator");
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational floor(const Rational& value) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return Rational(q);
}

Rational ceil(const Rational& value) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return Rational(q);
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

QVector QVector::from_ints(const std::vector<long>& values) {
    std::vector<Rational> entries;
    entries.reserve(values.size());
    for (long v : values) entries.emplace_back(v);
    return QVector(std::move(entries));
}

Rational QVector::dot(const QVector& other) const {
    if (other.dim() != dim()) throw InvalidArgument("dot: dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < dim(); ++i) acc += entries_[i] * other.entries_[i];
    return acc;
}

Rational QVector::sum() const {
    Rational acc = 0;
    for (const auto& e : entries_) acc += e;
    return acc;
}

bool QVector::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& e) { return sgn(e) >= 0; });
}

bool QVector::is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& e) { return is_integer(e); });
}

std::string to_string(const QVector& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) out << ',';
        out << to_string(v[i]);
    }
    out << ')';
    return out.str();
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
    QMatrix M(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InvalidArgument("from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) M(r, c) = rows[r][c];
    }
    return M;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix M(n, n);
    for (std::size_t i = 0; i < n; ++i) M(i, i) = 1;
    return M;
}

QMatrix QMatrix::transpose() const {
    QMatrix T(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) T(c, r) = (*this)(r, c);
    return T;
}

QVector QMatrix::column(std::size_t c) const {
    QVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

QVector QMatrix::row(std::size_t r) const {
    QVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

QVector QMatrix::operator*(const QVector& x) const {
    if (x.dim() != cols_) throw InvalidArgument("matrix-vector product: dimension mismatch");
    QVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
        out[r] = acc;
    }
    return out;
}

QVector QMatrix::left_multiply(const QVector& x) const {
    if (x.dim() != rows_) throw InvalidArgument("vector-matrix product: dimension mismatch");
    QVector out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        Rational acc = 0;
        for (std::size_t r = 0; r < rows_; ++r) acc += x[r] * (*this)(r, c);
        out[c] = acc;
    }
    return out;
}

const char* to_string(LPStatus status) {
    switch (status) {
        case LPStatus::optimal: return "optimal";
        case LPStatus::infeasible: return "infeasible";
        case LPStatus::unbounded: return "unbounded";
    }
    return "?";
}

namespace {

// Dense tableau for  max ⟨c,y⟩  s.t.  Ay + s = b,  y, s ≥ 0.
// Rows with b_i < 0 are negated and given an artificial variable, so the
// starting basis is the identity in the (row-signed) system.
// Column layout: [0,n) structural, [n,n+m) slacks, [n+m, n+m+k) artificials.
class Tableau {
public:
    Tableau(const QMatrix& A, const QVector& b)
        : m_(A.rows()), n_(A.cols()), sign_(m_, 1), init_col_(m_), basis_(m_) {
        std::size_t artificials = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (sgn(b[i]) < 0) ++artificials;
        width_ = n_ + m_ + artificials;
        cells_.assign(m_ * width_, Rational(0));
        rhs_.resize(m_);
        std::size_t next_art = n_ + m_;
        for (std::size_t i = 0; i < m_; ++i) {
            sign_[i] = sgn(b[i]) < 0 ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) at(i, j) = sign_[i] * A(i, j);
            at(i, n_ + i) = sign_[i];
            rhs_[i] = sign_[i] * b[i];
            if (sign_[i] < 0) {
                at(i, next_art) = 1;
                init_col_[i] = next_art++;
            } else {
                init_col_[i] = n_ + i;
            }
            basis_[i] = init_col_[i];
        }
        obj_.assign(width_, Rational(0));
    }

    bool has_artificials() const { return width_ > n_ + m_; }
    bool is_artificial(std::size_t col) const { return col >= n_ + m_; }

    void set_objective(const std::vector<Rational>& costs) {
        costs_ = costs;
        for (std::size_t j = 0; j < width_; ++j) {
            Rational z = 0;
            for (std::size_t r = 0; r < m_; ++r) z += costs_[basis_[r]] * at(r, j);
            obj_[j] = costs_[j] - z;
        }
    }

    Rational objective_value() const {
        Rational v = 0;
        for (std::size_t r = 0; r < m_; ++r) v += costs_[basis_[r]] * rhs_[r];
        return v;
    }

    enum class Outcome { optimal, unbounded };

    // Bland's rule: lowest-index improving column, ties in the ratio test
    // broken by lowest basic-variable index.
    Outcome run(bool allow_artificials, std::size_t& unbounded_col) {
        for (;;) {
            std::size_t enter = width_;
            for (std::size_t j = 0; j < width_; ++j) {
                if (!allow_artificials && is_artificial(j)) continue;
                if (sgn(obj_[j]) > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == width_) return Outcome::optimal;
            std::size_t leave = m_;
            Rational best_ratio;
            for (std::size_t r = 0; r < m_; ++r) {
                if (sgn(at(r, enter)) <= 0) continue;
                Rational ratio = rhs_[r] / at(r, enter);
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave == m_) {
                unbounded_col = enter;
                return Outcome::unbounded;
            }
            pivot(leave, enter);
        }
    }

    // Moves basic artificials at level zero out of the basis where the row
    // still has a nonzero structural or slack entry.
    void drive_out_artificials() {
        for (std::size_t r = 0; r < m_; ++r) {
            if (!is_artificial(basis_[r])) continue;
            for (std::size_t j = 0; j < n_ + m_; ++j) {
                if (sgn(at(r, j)) != 0) {
                    pivot(r, j);
                    break;
                }
            }
        }
    }

    // Multipliers on the original (unsigned) rows: x = diag(sign)·c_Bᵀ·B⁻¹.
    QVector row_multipliers() const {
        QVector x(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            Rational acc = 0;
            for (std::size_t r = 0; r < m_; ++r) acc += costs_[basis_[r]] * at(r, init_col_[i]);
            x[i] = sign_[i] * acc;
        }
        return x;
    }

    QVector primal() const {
        QVector y(n_);
        for (std::size_t r = 0; r < m_; ++r)
            if (basis_[r] < n_) y[basis_[r]] = rhs_[r];
        return y;
    }

    QVector ray(std::size_t col) const {
        QVector d(n_);
        if (col < n_) d[col] = 1;
        for (std::size_t r = 0; r < m_; ++r)
            if (basis_[r] < n_) d[basis_[r]] = -at(r, col);
        return d;
    }

    std::size_t width() const { return width_; }
    std::size_t structural() const { return n_; }

private:
    Rational& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }

    void pivot(std::size_t row, std::size_t col) {
        const Rational p = at(row, col);
        for (std::size_t j = 0; j < width_; ++j) at(row, j) /= p;
        rhs_[row] /= p;
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == row) continue;
            const Rational f = at(r, col);
            if (sgn(f) == 0) continue;
            for (std::size_t j = 0; j < width_; ++j) {
                if (sgn(at(row, j)) != 0) at(r, j) -= f * at(row, j);
            }
            rhs_[r] -= f * rhs_[row];
        }
        const Rational f = obj_[col];
        if (sgn(f) != 0) {
            for (std::size_t j = 0; j < width_; ++j) {
                if (sgn(at(row, j)) != 0) obj_[j] -= f * at(row, j);
            }
        }
        basis_[row] = col;
    }

    std::size_t m_;
    std::size_t n_;
    std::size_t width_ = 0;
    std::vector<int> sign_;
    std::vector<std::size_t> init_col_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> cells_;
    std::vector<Rational> rhs_;
    std::vector<Rational> obj_;
    std::vector<Rational> costs_;
};

void check_shapes(const QMatrix& A, const QVector& b, const QVector& c) {
    if (b.dim() != A.rows()) throw InvalidArgument("lp: b must have one entry per row of A");
    if (c.dim() != A.cols()) throw InvalidArgument("lp: c must have one entry per column of A");
}

}  // namespace

LPSolution lp_max(const QMatrix& A, const QVector& b, const QVector& c) {
    check_shapes(A, b, c);
    Tableau t(A, b);
    LPSolution out;

    if (t.has_artificials()) {
        std::vector<Rational> phase_one(t.width(), Rational(0));
        for (std::size_t j = 0; j < t.width(); ++j)
            if (t.is_artificial(j)) phase_one[j] = -1;
        t.set_objective(phase_one);
        std::size_t unused = 0;
        t.run(true, unused);  // bounded above by 0
        if (sgn(t.objective_value()) < 0) {
            out.status = LPStatus::infeasible;
            out.farkas = t.row_multipliers();
            return out;
        }
        t.drive_out_artificials();
    }

    std::vector<Rational> costs(t.width(), Rational(0));
    for (std::size_t j = 0; j < A.cols(); ++j) costs[j] = c[j];
    t.set_objective(costs);
    std::size_t unbounded_col = 0;
    if (t.run(false, unbounded_col) == Tableau::Outcome::unbounded) {
        out.status = LPStatus::unbounded;
        out.ray = t.ray(unbounded_col);
        return out;
    }
    out.status = LPStatus::optimal;
    out.value = t.objective_value();
    out.primal = t.primal();
    out.dual = t.row_multipliers();
    return out;
}

LPSolution lp_min(const QMatrix& A, const QVector& b, const QVector& c) {
    check_shapes(A, b, c);
    QMatrix negA(A.rows(), A.cols());
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t col = 0; col < A.cols(); ++col) negA(r, col) = -A(r, col);
    QVector negb(b.dim()), negc(c.dim());
    for (std::size_t i = 0; i < b.dim(); ++i) negb[i] = -b[i];
    for (std::size_t i = 0; i < c.dim(); ++i) negc[i] = -c[i];
    LPSolution sol = lp_max(negA, negb, negc);
    if (sol.value) sol.value = -*sol.value;
    return sol;
}

bool verify_max(const QMatrix& A, const QVector& b, const QVector& c, const LPSolution& sol) {
    switch (sol.status) {
        case LPStatus::optimal: {
            if (!sol.value || !sol.primal || !sol.dual) return false;
            const QVector& y = *sol.primal;
            const QVector& x = *sol.dual;
            if (!y.is_nonnegative() || !x.is_nonnegative()) return false;
            QVector Ay = A * y;
            for (std::size_t i = 0; i < b.dim(); ++i)
                if (Ay[i] > b[i]) return false;
            QVector xA = A.left_multiply(x);
            for (std::size_t j = 0; j < c.dim(); ++j)
                if (xA[j] < c[j]) return false;
            return c.dot(y) == *sol.value && b.dot(x) == *sol.value;
        }
        case LPStatus::infeasible: {
            if (!sol.farkas) return false;
            const QVector& x = *sol.farkas;
            if (!x.is_nonnegative()) return false;
            QVector xA = A.left_multiply(x);
            if (!xA.is_nonnegative()) return false;
            return sgn(b.dot(x)) < 0;
        }
        case LPStatus::unbounded: {
            if (!sol.ray) return false;
            const QVector& d = *sol.ray;
            if (!d.is_nonnegative()) return false;
            QVector Ad = A * d;
            for (const auto& e : Ad)
                if (sgn(e) > 0) return false;
            return sgn(c.dot(d)) > 0;
        }
    }
    return false;
}

bool verify_min(const QMatrix& A, const QVector& b, const QVector& c, const LPSolution& sol) {
    switch (sol.status) {
        case LPStatus::optimal: {
            if (!sol.value || !sol.primal || !sol.dual) return false;
            const QVector& y = *sol.primal;
            const QVector& x = *sol.dual;
            if (!y.is_nonnegative() || !x.is_nonnegative()) return false;
            QVector Ay = A * y;
            for (std::size_t i = 0; i < b.dim(); ++i)
                if (Ay[i] < b[i]) return false;
            QVector xA = A.left_multiply(x);
            for (std::size_t j = 0; j < c.dim(); ++j)
                if (xA[j] > c[j]) return false;
            return c.dot(y) == *sol.value && b.dot(x) == *sol.value;
        }
        case LPStatus::infeasible: {
            if (!sol.farkas) return false;
            const QVector& x = *sol.farkas;
            if (!x.is_nonnegative()) return false;
            QVector xA = A.left_multiply(x);
            for (const auto& e : xA)
                if (sgn(e) > 0) return false;
            return sgn(b.dot(x)) > 0;
        }
        case LPStatus::unbounded: {
            if (!sol.ray) return false;
            const QVector& d = *sol.ray;
            if (!d.is_nonnegative()) return false;
            QVector Ad = A * d;
            for (const auto& e : Ad)
                if (sgn(e) < 0) return false;
            return sgn(c.dot(d)) < 0;
        }
    }
    return false;
}

std::size_t rank(const QMatrix& M) {
    std::vector<std::vector<Rational>> rows(M.rows(), std::vector<Rational>(M.cols()));
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) rows[r][c] = M(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < M.cols() && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (sgn(rows[r][c]) == 0) continue;
            Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < M.cols(); ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::optional<QVector> solve_square(const QMatrix& M, const QVector& rhs) {
    const std::size_t n = M.rows();
    if (M.cols() != n || rhs.dim() != n) throw InvalidArgument("solve_square: shape mismatch");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a[r][c] = M(r, c);
        a[r][n] = rhs[r];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && sgn(a[piv][c]) == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || sgn(a[r][c]) == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    QVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

}  // namespace nmi::lp
