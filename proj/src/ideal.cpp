#include "nmi/ideal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "nmi/errors.hpp"

namespace nmi {

Exponent::Exponent(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < 0) throw InvalidArgument("exponent entries must be natural numbers");
}

long Exponent::degree() const { return std::accumulate(entries_.begin(), entries_.end(), 0L); }

bool Exponent::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

bool Exponent::is_squarefree() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e <= 1; });
}

bool Exponent::divides(const Exponent& other) const {
    if (other.num_vars() != num_vars()) throw InvalidArgument("divides: arity mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] > other.entries_[i]) return false;
    return true;
}

Exponent Exponent::operator+(const Exponent& other) const {
    if (other.num_vars() != num_vars()) throw InvalidArgument("exponent sum: arity mismatch");
    Exponent out(*this);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
    return out;
}

Exponent Exponent::scaled(int factor) const {
    Exponent out(*this);
    for (int& e : out.entries_) e *= factor;
    return out;
}

lp::QVector Exponent::to_qvector() const {
    lp::QVector v(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) v[i] = entries_[i];
    return v;
}

std::string to_monomial_string(const Exponent& a) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < a.num_vars(); ++i) {
        if (a[i] == 0) continue;
        if (!first) out << '*';
        first = false;
        out << 't' << (i + 1);
        if (a[i] > 1) out << '^' << a[i];
    }
    if (first) return "1";
    return out.str();
}

std::vector<std::size_t> support(const Exponent& a) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.num_vars(); ++i)
        if (a[i] > 0) out.push_back(i);
    return out;
}

const char* to_string(IdealKind kind) {
    switch (kind) {
        case IdealKind::zero: return "zero";
        case IdealKind::unit: return "unit";
        case IdealKind::proper: return "proper";
    }
    return "?";
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Exponent& g) { return g.is_squarefree(); });
}

std::optional<long> MonomialIdeal::common_degree() const {
    if (gens_.empty()) return std::nullopt;
    long d = gens_.front().degree();
    for (const auto& g : gens_)
        if (g.degree() != d) return std::nullopt;
    return d;
}

bool MonomialIdeal::contains(const Exponent& a) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return g.divides(a); });
}

MonomialIdeal make_ideal(std::size_t num_vars, std::vector<Exponent> raw_gens) {
    for (const auto& g : raw_gens)
        if (g.num_vars() != num_vars)
            throw InvalidArgument("generator has " + std::to_string(g.num_vars()) +
                                  " entries, expected " + std::to_string(num_vars));
    MonomialIdeal I;
    I.num_vars_ = num_vars;
    std::sort(raw_gens.begin(), raw_gens.end(),
              [](const Exponent& a, const Exponent& b) {
                  if (a.degree() != b.degree()) return a.degree() < b.degree();
                  return a < b;
              });
    raw_gens.erase(std::unique(raw_gens.begin(), raw_gens.end()), raw_gens.end());
    // A divisor has total degree no larger than its multiple, so scanning
    // by degree only needs to test against already accepted generators.
    std::vector<Exponent> kept;
    for (auto& g : raw_gens) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Exponent& h) { return h.divides(g); });
        if (!redundant) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end());
    if (kept.empty()) {
        I.kind_ = IdealKind::zero;
    } else if (kept.front().is_zero()) {
        I.kind_ = IdealKind::unit;
    } else {
        I.kind_ = IdealKind::proper;
    }
    I.gens_ = std::move(kept);
    return I;
}

MonomialIdeal zero_ideal(std::size_t num_vars) { return make_ideal(num_vars, {}); }

MonomialIdeal unit_ideal(std::size_t num_vars) { return make_ideal(num_vars, {Exponent(num_vars)}); }

lp::QMatrix incidence_matrix(const MonomialIdeal& I) {
    if (!I.is_proper())
        throw UnsupportedInput(std::string("incidence matrix of the ") + to_string(I.kind()) + " ideal");
    lp::QMatrix A(I.num_vars(), I.num_gens());
    for (std::size_t j = 0; j < I.num_gens(); ++j)
        for (std::size_t i = 0; i < I.num_vars(); ++i) A(i, j) = I.gens()[j][i];
    return A;
}

MonomialIdeal product(const MonomialIdeal& I1, const MonomialIdeal& I2) {
    if (I1.num_vars() != I2.num_vars()) throw InvalidArgument("product: ideals live in different rings");
    std::vector<Exponent> raw;
    raw.reserve(I1.num_gens() * I2.num_gens());
    for (const auto& g : I1.gens())
        for (const auto& h : I2.gens()) raw.push_back(g + h);
    return make_ideal(I1.num_vars(), std::move(raw));
}

MonomialIdeal power(const MonomialIdeal& I, int n) {
    if (n < 0) throw InvalidArgument("power: negative exponent");
    MonomialIdeal out = unit_ideal(I.num_vars());
    for (int k = 0; k < n; ++k) out = product(out, I);
    return out;
}

MonomialIdeal dual_star(const MonomialIdeal& I) {
    if (!I.is_squarefree()) throw InvalidArgument("dual_star: ideal is not squarefree");
    std::vector<Exponent> raw;
    for (const auto& g : I.gens()) {
        Exponent c(I.num_vars());
        for (std::size_t i = 0; i < I.num_vars(); ++i) c[i] = 1 - g[i];
        raw.push_back(std::move(c));
    }
    return make_ideal(I.num_vars(), std::move(raw));
}

bool disjoint_supports(const MonomialIdeal& I1, const MonomialIdeal& I2) {
    if (I1.num_vars() != I2.num_vars()) throw InvalidArgument("ideals live in different rings");
    std::vector<bool> used(I1.num_vars(), false);
    for (const auto& g : I1.gens())
        for (auto i : support(g)) used[i] = true;
    for (const auto& g : I2.gens())
        for (auto i : support(g))
            if (used[i]) return false;
    return true;
}

namespace {

struct ResidualKey {
    std::vector<int> residual;
    int remaining;
    bool operator==(const ResidualKey&) const = default;
};

struct ResidualHash {
    std::size_t operator()(const ResidualKey& k) const noexcept {
        std::size_t h = std::hash<int>{}(k.remaining);
        for (int e : k.residual) h = h * 1000003u ^ std::hash<int>{}(e);
        return h;
    }
};

}  // namespace

std::optional<PowerCertificate> power_membership(const MonomialIdeal& I, const Exponent& a, int n) {
    if (a.num_vars() != I.num_vars()) throw InvalidArgument("power_membership: arity mismatch");
    if (n < 0) throw InvalidArgument("power_membership: negative power");
    if (n == 0) return PowerCertificate{};
    if (I.kind() == IdealKind::zero) return std::nullopt;
    if (I.kind() == IdealKind::unit) return PowerCertificate{std::vector<std::size_t>(n, 0)};

    const auto& gens = I.gens();
    long min_degree = gens.front().degree();
    for (const auto& g : gens) min_degree = std::min(min_degree, g.degree());

    std::unordered_set<ResidualKey, ResidualHash> dead;
    std::vector<std::size_t> path;

    // Failures are memoized on (residual, remaining): whether some multiset
    // of `remaining` generators fits under the residual does not depend on
    // the order the residual was reached in.
    std::function<bool(std::vector<int>&, int)> search = [&](std::vector<int>& r, int remaining) -> bool {
        if (remaining == 0) return true;
        long deg = std::accumulate(r.begin(), r.end(), 0L);
        if (deg < remaining * min_degree) return false;
        ResidualKey key{r, remaining};
        if (dead.count(key)) return false;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const auto& g = gens[gi];
            bool fits = true;
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (g[i] > r[i]) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            for (std::size_t i = 0; i < r.size(); ++i) r[i] -= g[i];
            path.push_back(gi);
            bool ok = search(r, remaining - 1);
            for (std::size_t i = 0; i < r.size(); ++i) r[i] += g[i];
            if (ok) return true;
            path.pop_back();
        }
        dead.insert(std::move(key));
        return false;
    };

    std::vector<int> residual = a.entries();
    if (!search(residual, n)) return std::nullopt;
    std::sort(path.begin(), path.end());
    return PowerCertificate{path};
}

bool verify_power_certificate(const MonomialIdeal& I, const Exponent& a, int n, const PowerCertificate& cert) {
    if (static_cast<int>(cert.generator_indices.size()) != n) return false;
    Exponent sum(I.num_vars());
    for (auto gi : cert.generator_indices) {
        if (gi >= I.num_gens()) return false;
        sum = sum + I.gens()[gi];
    }
    return sum.divides(a);
}

}  // namespace nmi
