#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "nmi/closure.hpp"
#include "nmi/cone.hpp"

using namespace nmi;
using fixtures::ideal;

namespace {

std::set<std::vector<long>> as_set(const std::vector<IntVector>& v) {
    std::set<std::vector<long>> out;
    for (const auto& x : v) out.insert(std::vector<long>(x.begin(), x.end()));
    return out;
}

std::vector<std::vector<long>> as_long(const std::vector<IntVector>& v) {
    std::vector<std::vector<long>> out;
    for (const auto& x : v) out.emplace_back(x.begin(), x.end());
    return out;
}

MonomialIdeal cycle_ideal(std::size_t n) { return edge_ideal(oracle::cycle(n)); }

}  // namespace

TEST_CASE("rees cone generators") {
    CHECK(rees_cone(ideal(2, {{1, 1}})).generators() ==
          std::vector<IntVector>{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}});
    const auto C = rees_cone(fixtures::degree7_ideal());
    CHECK(C.dim() == 11);
    CHECK(C.generators().size() == 20);
    CHECK(rees_cone(fixtures::triangle()).generators().size() == 6);
    CHECK_THROWS_AS(rees_cone(zero_ideal(2)), UnsupportedInput);
    CHECK_THROWS_AS(rees_cone(unit_ideal(2)), UnsupportedInput);
}

TEST_CASE("the set B") {
    const auto B = b_set(ideal(2, {{1, 1}}));
    CHECK(as_set(B.generators()) == std::set<std::vector<long>>{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    CHECK(b_set(cycle_ideal(5)).generators().size() == 11);

    const auto rows = parse_matrix_block(fixtures::read_data("degree7_bset.block")).rows;
    const auto G = b_set(fixtures::degree7_ideal()).generators();
    CHECK(G.size() == 21);
    std::set<std::vector<long>> listed;
    for (const auto& r : rows) listed.emplace(r.begin(), r.end());
    CHECK(as_set(G) == listed);
}

TEST_CASE("Hilbert basis of a two-dimensional cone") {
    const IntegerCone C(2, {{1, 0}, {1, 2}});
    const auto hb = hilbert_basis(C);
    CHECK(as_set(hb.minimal_hb) == std::set<std::vector<long>>{{1, 0}, {1, 1}, {1, 2}});
    CHECK_FALSE(hb.input_is_hb);
    REQUIRE(hb.witness);
    CHECK(*hb.witness == IntVector{1, 1});
    CHECK(as_set(hb.minimal_hb) == as_set([&] {
              std::vector<IntVector> v;
              for (const auto& x : oracle::hilbert_basis_scan({{1, 0}, {1, 2}}, 4)) v.emplace_back(x.begin(), x.end());
              return v;
          }()));
}

TEST_CASE("unimodular cones are their own Hilbert basis") {
    for (std::size_t s = 1; s <= 5; ++s) {
        std::vector<IntVector> e;
        for (std::size_t i = 0; i < s; ++i) {
            IntVector v(s, 0);
            v[i] = 1;
            e.push_back(v);
        }
        const auto hb = hilbert_basis(IntegerCone(s, e));
        CHECK(hb.input_is_hb);
        CHECK(as_set(hb.minimal_hb) == as_set(e));
    }
}

TEST_CASE("B of the degree-7 ideal is not a Hilbert basis") {
    const auto B = b_set(fixtures::degree7_ideal());
    const auto hb = hilbert_basis(B);
    CHECK_FALSE(hb.input_is_hb);
    REQUIRE(hb.witness);
    CHECK(cone_contains(B, *hb.witness));
    CHECK_FALSE(semigroup_membership(B, *hb.witness));
}

TEST_CASE("non-pointed and malformed cones are rejected") {
    CHECK_THROWS_AS(IntegerCone(1, {{1}, {-1}}), UnsupportedInput);
    CHECK_THROWS_AS(IntegerCone(2, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(IntegerCone(2, {{1, 0, 0}}), InvalidArgument);
}

TEST_CASE("Hilbert bases agree with a brute-force lattice scan") {
    std::mt19937 rng(5);
    for (int t = 0; t < 60; ++t) {
        const std::size_t d = t < 40 ? 3 : 4;
        std::uniform_int_distribution<int> e(0, d == 3 ? 3 : 2), count(2, d == 3 ? 4 : 3);
        std::vector<IntVector> gens;
        const int q = count(rng);
        while (static_cast<int>(gens.size()) < q) {
            IntVector g(d);
            for (auto& x : g) x = e(rng);
            if (std::any_of(g.begin(), g.end(), [](auto x) { return x != 0; })) gens.push_back(g);
        }
        std::vector<long> degrees;
        for (const auto& g : gens) degrees.push_back(std::accumulate(g.begin(), g.end(), 0L));
        std::sort(degrees.rbegin(), degrees.rend());
        const long bound = std::accumulate(degrees.begin(), degrees.begin() + std::min<long>(d, degrees.size()), 0L);
        const auto hb = hilbert_basis(IntegerCone(d, gens));
        const auto expected = oracle::hilbert_basis_scan(as_long(gens), bound);
        CHECK(as_set(hb.minimal_hb) == std::set<std::vector<long>>(expected.begin(), expected.end()));
        const bool all_in = std::all_of(expected.begin(), expected.end(),
                                        [&](const auto& x) { return oracle::in_semigroup(as_long(gens), x); });
        CHECK(hb.input_is_hb == all_in);
        if (hb.witness) {
            std::vector<long> w(hb.witness->begin(), hb.witness->end());
            CHECK(oracle::in_cone(as_long(gens), w));
            CHECK_FALSE(oracle::in_semigroup(as_long(gens), w));
        }
    }
}

TEST_CASE("normality via the Rees cone") {
    const auto r = normality_via_rees(fixtures::degree7_ideal());
    CHECK(r.normal);
    CHECK(r.route == "rees");

    const auto h4 = normality_via_rees(edge_ideal(fixtures::kaiser_h4()));
    CHECK_FALSE(h4.normal);
    REQUIRE(h4.witness_monomial);
    CHECK(closure_membership(edge_ideal(fixtures::kaiser_h4()), *h4.witness_monomial, h4.witness_power).member);
    CHECK_FALSE(power_membership(edge_ideal(fixtures::kaiser_h4()), *h4.witness_monomial, h4.witness_power));

    CHECK(normality_via_rees(ideal(2, {{2, 1}})).normal);
}

TEST_CASE("non-normality certificates carry the power p") {
    const auto I = edge_ideal(fixtures::two_triangles());
    const auto r = normality_via_rees(I);
    REQUIRE_FALSE(r.normal);
    REQUIRE(r.witness_monomial);
    CHECK(*r.witness_monomial == Exponent({1, 1, 1, 1, 1, 1}));
    CHECK(r.witness_power == 3);
    REQUIRE(r.scale_p >= 1);
    // (t^a)^p is the product of generators with the recorded multiplicities.
    Exponent sum(I.num_vars());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < I.num_gens(); ++i) {
        sum = sum + I.gens()[i].scaled(static_cast<int>(r.scale_multiplicities[i]));
        total += r.scale_multiplicities[i];
    }
    CHECK(total == r.scale_p * r.witness_power);
    CHECK(sum.divides(r.witness_monomial->scaled(r.scale_p)));
    CHECK(power_membership(I, r.witness_monomial->scaled(r.scale_p), r.scale_p * r.witness_power));
}

TEST_CASE("normality via B") {
    const auto c5 = normality_via_bset(cycle_ideal(5));
    CHECK(c5.normal);
    CHECK(c5.route == "bset");
    const auto tt = normality_via_bset(edge_ideal(fixtures::two_triangles()));
    CHECK_FALSE(tt.normal);
    CHECK(tt.cone_witness);
    const auto I = ideal(2, {{2, 0}, {1, 1}});
    CHECK(normality_via_bset(I).normal == normality_via_rees(I).normal);
    CHECK_THROWS_AS(normality_via_bset(fixtures::degree7_ideal()), UnsupportedInput);
}

TEST_CASE("zero and unit ideals are normal by convention") {
    CHECK(normality_via_rees(zero_ideal(3)).route == "convention");
    CHECK(normality_via_rees(unit_ideal(3)).normal);
    CHECK(normality_via_bset(zero_ideal(3)).normal);
}

TEST_CASE("dual normality") {
    CHECK(dual_normality(cycle_ideal(5)));
    Graph two_c5 = oracle::graph_from(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {6, 10}});
    CHECK_FALSE(dual_normality(edge_ideal(two_c5)));
    CHECK_FALSE(normality_via_rees(dual_star(edge_ideal(two_c5))).normal);
    const auto single = ideal(3, {{1, 1, 0}});
    CHECK(dual_normality(single));
    CHECK(dual_star(single) == ideal(3, {{0, 0, 1}}));
    CHECK_THROWS_AS(dual_normality(fixtures::squares()), UnsupportedInput);
}
