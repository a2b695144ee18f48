#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "nmi/formats.hpp"

using namespace nmi;

namespace {

template <class F>
ParseError parse_error(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("ideal files accept vectors, monomials and comments") {
    const auto I = parse_ideal("# comment\nvars 3\n\n2 0 1   # trailing\nt2^3*t3\nt1*t1\n");
    CHECK(I == fixtures::ideal(3, {{2, 0, 1}, {0, 3, 1}, {2, 0, 0}}));
    CHECK(parse_ideal("vars 2\n1\n").kind() == IdealKind::unit);
    CHECK(parse_ideal("vars 2\n").kind() == IdealKind::zero);
}

TEST_CASE("ideal file errors carry line and column") {
    auto e = parse_error([] { parse_ideal("vars 3\n1 2\n"); });
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
    e = parse_error([] { parse_ideal("vars 3\n1 x 2\n"); });
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
    e = parse_error([] { parse_ideal("vars 2\nt1*t3\n"); });
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
    e = parse_error([] { parse_ideal("variables 2\n"); });
    CHECK(e.line() == 1);
    CHECK_THROWS_AS(parse_ideal(""), ParseError);
    CHECK_THROWS_AS(parse_ideal("vars 2\n1 -1\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal("vars 2\nt1**t2\n"), ParseError);
    CHECK_THROWS_AS(parse_monomial("t0", 2), ParseError);
}

TEST_CASE("graph and clutter files") {
    const Graph G = parse_graph("vertices 3\n1 2\n2 3\n");
    CHECK(G.num_edges() == 2);
    auto e = parse_error([] { parse_graph("vertices 3\n1 1\n"); });
    CHECK(e.line() == 2);
    e = parse_error([] { parse_graph("vertices 3\n1 4\n"); });
    CHECK(e.column() == 3);
    CHECK_THROWS_AS(parse_graph("vertices 3\n1 2\n2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertices 3\n1 2 3\n"), ParseError);

    const Clutter C = parse_clutter("vertices 4\n1 2 3\n3 4\n");
    CHECK(C.edges().size() == 2);
    e = parse_error([] { parse_clutter("vertices 4\n1 2 3\n2 3\n"); });
    CHECK(e.line() == 3);
}

TEST_CASE("matrix blocks in both modes") {
    const auto A = parse_matrix_block(fixtures::read_data("degree7_bset.block"));
    CHECK(A.mode == MatrixMode::normalization);
    CHECK(A.amb_space == 11);
    CHECK(A.rows.size() == 21);
    const auto R = parse_matrix_block(fixtures::read_data("degree7_rees.block"));
    CHECK(R.mode == MatrixMode::rees_algebra);
    CHECK(R.amb_space == 11);
    CHECK(R.rows.size() == 10);
    CHECK(R.rows[0].size() == 10);

    const auto implicit = parse_matrix_block("normalization 2\n1 0\n1 2\n");
    CHECK(implicit.amb_space == 2);

    auto e = parse_error([] { parse_matrix_block("amb_space 3\ninhom_inequalities 1\n1 0 0\n"); });
    CHECK(std::string(e.what()).find("unsupported directive") != std::string::npos);
    CHECK_THROWS_AS(parse_matrix_block("amb_space 3\nnormalization 2\n1 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_block("amb_space 3\nnormalization 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_block("amb_space 3\nnormalization 1\n1 0 0\n1 1 1\n"), ParseError);
}

TEST_CASE("blocks built from an ideal match the listed input") {
    const auto I = fixtures::degree7_ideal();
    const auto rees = rees_block(I);
    CHECK(rees.rows.size() == 10);
    CHECK(rees.amb_space == 11);
    CHECK(b_set_block(I).rows.size() == 21);
}

TEST_CASE("serialization round-trips") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> e(0, 4), count(0, 5);
    for (int t = 0; t < 100; ++t) {
        std::vector<Exponent> raw;
        const int q = count(rng);
        for (int i = 0; i < q; ++i) raw.emplace_back(std::vector<int>{e(rng), e(rng), e(rng), e(rng)});
        const auto I = make_ideal(4, raw);
        CHECK(parse_ideal(serialize_ideal(I)) == I);
        CHECK(serialize_ideal(parse_ideal(serialize_ideal(I))) == serialize_ideal(I));

        const Graph G = oracle::random_graph(rng, 1 + t % 9, 0.4);
        CHECK(parse_graph(serialize_graph(G)) == G);
        CHECK(parse_clutter(serialize_clutter(G.clutter())) == G.clutter());
    }
    for (const char* name : {"degree7_bset.block", "degree7_rees.block", "unit_vectors.block"}) {
        const auto block = parse_matrix_block(fixtures::read_data(name));
        const std::string text = serialize_matrix_block(block);
        CHECK(parse_matrix_block(text) == block);
        CHECK(serialize_matrix_block(parse_matrix_block(text)) == text);
    }
}
