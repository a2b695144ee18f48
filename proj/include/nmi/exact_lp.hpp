#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace nmi::lp {

/// Exact rational number. gmpxx keeps results of arithmetic canonical;
/// values built from a numerator/denominator pair go through `make_rational`.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator);

/// Renders "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Rational floor(const Rational& value);
Rational ceil(const Rational& value);
bool is_integer(const Rational& value);

class QVector {
public:
    QVector() = default;
    explicit QVector(std::size_t dim) : entries_(dim, Rational(0)) {}
    explicit QVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
    QVector(std::initializer_list<Rational> entries) : entries_(entries) {}

    static QVector from_ints(const std::vector<long>& values);

    std::size_t dim() const noexcept { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    const std::vector<Rational>& entries() const noexcept { return entries_; }

    Rational dot(const QVector& other) const;
    Rational sum() const;
    bool is_nonnegative() const;
    bool is_integral() const;

    friend bool operator==(const QVector& a, const QVector& b) { return a.entries_ == b.entries_; }

private:
    std::vector<Rational> entries_;
};

std::string to_string(const QVector& v);

/// Dense row-major rational matrix.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    static QMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);
    static QMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    QMatrix transpose() const;
    QVector column(std::size_t c) const;
    QVector row(std::size_t r) const;
    QVector operator*(const QVector& x) const;
    /// xᵀ·M.
    QVector left_multiply(const QVector& x) const;

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

enum class LPStatus { optimal, infeasible, unbounded };

const char* to_string(LPStatus status);

/// Result of an exact LP solve.
///
/// For `lp_max(A, b, c)` (max ⟨c,y⟩, y ≥ 0, Ay ≤ b):
///   - optimal: `primal` is y, `dual` is x with x ≥ 0, Aᵀx ≥ c and
///     ⟨b,x⟩ = ⟨c,y⟩ = value.
///   - infeasible: `farkas` is x ≥ 0 with Aᵀx ≥ 0 and ⟨b,x⟩ < 0.
///   - unbounded: `ray` is d ≥ 0 with Ad ≤ 0 and ⟨c,d⟩ > 0.
///
/// For `lp_min(A, b, c)` (min ⟨c,y⟩, y ≥ 0, Ay ≥ b):
///   - optimal: `dual` is x ≥ 0 with Aᵀx ≤ c and ⟨b,x⟩ = value.
///   - infeasible: `farkas` is x ≥ 0 with Aᵀx ≤ 0 and ⟨b,x⟩ > 0.
///   - unbounded: `ray` is d ≥ 0 with Ad ≥ 0 and ⟨c,d⟩ < 0.
struct LPSolution {
    LPStatus status = LPStatus::infeasible;
    std::optional<Rational> value;
    std::optional<QVector> primal;
    std::optional<QVector> dual;
    std::optional<QVector> farkas;
    std::optional<QVector> ray;
};

LPSolution lp_max(const QMatrix& A, const QVector& b, const QVector& c);
LPSolution lp_min(const QMatrix& A, const QVector& b, const QVector& c);

/// Re-checks a solution of `lp_max` by arithmetic only.
bool verify_max(const QMatrix& A, const QVector& b, const QVector& c, const LPSolution& sol);
/// Re-checks a solution of `lp_min` by arithmetic only.
bool verify_min(const QMatrix& A, const QVector& b, const QVector& c, const LPSolution& sol);

std::size_t rank(const QMatrix& M);

/// Unique solution of the square system Mx = rhs, or nullopt when M is singular.
std::optional<QVector> solve_square(const QMatrix& M, const QVector& rhs);

}  // namespace nmi::lp
