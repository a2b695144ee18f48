#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nmi/exact_lp.hpp"

namespace nmi {

/// Dense exponent vector a of the monomial t^a = t_1^{a_1}⋯t_s^{a_s}.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::size_t num_vars) : entries_(num_vars, 0) {}
    explicit Exponent(std::vector<int> entries);

    std::size_t num_vars() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<int>& entries() const noexcept { return entries_; }

    long degree() const;
    bool is_zero() const;
    bool is_squarefree() const;
    /// Componentwise ≤, i.e. t^this divides t^other.
    bool divides(const Exponent& other) const;

    Exponent operator+(const Exponent& other) const;
    Exponent scaled(int factor) const;

    lp::QVector to_qvector() const;

    auto operator<=>(const Exponent&) const = default;

private:
    std::vector<int> entries_;
};

/// "t1^2*t3" style rendering; "1" for the zero vector.
std::string to_monomial_string(const Exponent& a);

/// Indices i (0-based) with a_i > 0.
std::vector<std::size_t> support(const Exponent& a);

enum class IdealKind { zero, unit, proper };

const char* to_string(IdealKind kind);

/// Monomial ideal held as its minimal generating set, sorted
/// lexicographically. The unit ideal is {0-vector}; the zero ideal has no
/// generators.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    std::size_t num_vars() const noexcept { return num_vars_; }
    IdealKind kind() const noexcept { return kind_; }
    bool is_proper() const noexcept { return kind_ == IdealKind::proper; }
    const std::vector<Exponent>& gens() const& noexcept { return gens_; }
    std::vector<Exponent> gens() && noexcept { return std::move(gens_); }
    std::size_t num_gens() const noexcept { return gens_.size(); }

    bool is_squarefree() const;
    /// Total degree shared by all generators, if there is one.
    std::optional<long> common_degree() const;
    /// Whether t^a lies in the ideal (some generator divides it).
    bool contains(const Exponent& a) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    friend MonomialIdeal make_ideal(std::size_t, std::vector<Exponent>);

    std::size_t num_vars_ = 0;
    IdealKind kind_ = IdealKind::zero;
    std::vector<Exponent> gens_;
};

/// Minimalizes `raw_gens` into the unique antichain of divisibility-minimal
/// exponents. An empty list gives the zero ideal; a zero vector gives the
/// unit ideal. Throws InvalidArgument on arity mismatch.
MonomialIdeal make_ideal(std::size_t num_vars, std::vector<Exponent> raw_gens);

MonomialIdeal zero_ideal(std::size_t num_vars);
MonomialIdeal unit_ideal(std::size_t num_vars);

/// s×q matrix whose columns are the generators in canonical order.
lp::QMatrix incidence_matrix(const MonomialIdeal& I);

MonomialIdeal product(const MonomialIdeal& I1, const MonomialIdeal& I2);
MonomialIdeal power(const MonomialIdeal& I, int n);

/// Ideal generated by (t_1⋯t_s)/t^e for each generator t^e. Requires a
/// squarefree ideal.
MonomialIdeal dual_star(const MonomialIdeal& I);

/// Whether the two ideals' generators use disjoint sets of variables.
bool disjoint_supports(const MonomialIdeal& I1, const MonomialIdeal& I2);

/// Certificate that t^a ∈ I^n: generator indices (with repetition, sorted)
/// whose exponent sum divides t^a.
struct PowerCertificate {
    std::vector<std::size_t> generator_indices;
};

/// Decides t^a ∈ I^n by exhaustive search over multisets of n generators
/// with memoized residual exponents. nullopt means "not a member".
std::optional<PowerCertificate> power_membership(const MonomialIdeal& I, const Exponent& a, int n);

bool verify_power_certificate(const MonomialIdeal& I, const Exponent& a, int n,
                              const PowerCertificate& cert);

}  // namespace nmi
