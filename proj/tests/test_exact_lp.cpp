#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "nmi/exact_lp.hpp"

using namespace nmi;
using lp::QMatrix;
using lp::QVector;
using lp::Rational;

namespace {

QVector ones(std::size_t n) { return QVector(std::vector<Rational>(n, Rational(1))); }

QMatrix triangle_matrix() { return QMatrix::from_rows({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}, 3); }

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
    Rational r = lp::make_rational(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(lp::to_string(r) == "-3/2");
    CHECK(lp::to_string(Rational(4)) == "4");
    CHECK(lp::floor(r) == -2);
    CHECK(lp::ceil(r) == -1);
    CHECK_FALSE(lp::is_integer(r));
}

TEST_CASE("lp_max on the triangle incidence matrix") {
    const QMatrix A = triangle_matrix();
    const auto sol = lp::lp_max(A, ones(3), ones(3));
    REQUIRE(sol.status == lp::LPStatus::optimal);
    CHECK(*sol.value == lp::make_rational(3, 2));
    CHECK(*sol.primal == QVector{lp::make_rational(1, 2), lp::make_rational(1, 2), lp::make_rational(1, 2)});
    CHECK(lp::verify_max(A, ones(3), ones(3), sol));
    CHECK(*oracle::lp_by_vertices(A, ones(3), ones(3), +1) == *sol.value);
}

TEST_CASE("lp_max with the origin as the only feasible point") {
    const QMatrix A = QMatrix::from_rows({{1}}, 1);
    const auto sol = lp::lp_max(A, QVector{0}, QVector{1});
    REQUIRE(sol.status == lp::LPStatus::optimal);
    CHECK(*sol.value == 0);
    CHECK(*sol.primal == QVector{0});
}

TEST_CASE("lp_max on the cover ideal matrix of the odd antihole") {
    std::vector<std::vector<long>> B = fixtures::antihole_cover_matrix();
    const QMatrix A = QMatrix::from_rows(B, 7);
    const auto sol = lp::lp_max(A, ones(7), ones(7));
    REQUIRE(sol.status == lp::LPStatus::optimal);
    CHECK(*sol.value == lp::make_rational(7, 5));
    CHECK(*sol.value < 2);
    CHECK(lp::verify_max(A, ones(7), ones(7), sol));
    CHECK(*oracle::lp_by_vertices(A, ones(7), ones(7), +1) == *sol.value);
}

TEST_CASE("lp_min examples") {
    const QMatrix A = triangle_matrix();
    auto sol = lp::lp_min(A, ones(3), ones(3));
    REQUIRE(sol.status == lp::LPStatus::optimal);
    CHECK(*sol.value == lp::make_rational(3, 2));
    CHECK(lp::verify_min(A, ones(3), ones(3), sol));
    CHECK(*oracle::lp_by_vertices(A, ones(3), ones(3), -1) == *sol.value);

    sol = lp::lp_min(A, QVector(3), ones(3));
    REQUIRE(sol.status == lp::LPStatus::optimal);
    CHECK(*sol.value == 0);
    CHECK(*sol.primal == QVector(3));

    const QMatrix C = QMatrix::from_rows({{2}, {2}}, 1);
    sol = lp::lp_min(C, QVector{1, 1}, QVector{1});
    REQUIRE(sol.status == lp::LPStatus::optimal);
    CHECK(*sol.value == lp::make_rational(1, 2));
}

TEST_CASE("infeasible and unbounded programs carry certificates") {
    // y1 + y2 <= -1 has no nonnegative solution.
    const QMatrix A = QMatrix::from_rows({{1, 1}}, 2);
    auto sol = lp::lp_max(A, QVector{-1}, QVector{1, 1});
    REQUIRE(sol.status == lp::LPStatus::infeasible);
    REQUIRE(sol.farkas);
    CHECK(lp::verify_max(A, QVector{-1}, QVector{1, 1}, sol));

    // y1 - y2 <= 1 with objective y2 is unbounded.
    const QMatrix B = QMatrix::from_rows({{1, -1}}, 2);
    sol = lp::lp_max(B, QVector{1}, QVector{0, 1});
    REQUIRE(sol.status == lp::LPStatus::unbounded);
    REQUIRE(sol.ray);
    CHECK(lp::verify_max(B, QVector{1}, QVector{0, 1}, sol));

    // min -y subject to y >= 1 is unbounded.
    const QMatrix C = QMatrix::from_rows({{1}}, 1);
    sol = lp::lp_min(C, QVector{1}, QVector{-1});
    CHECK(sol.status == lp::LPStatus::unbounded);
    CHECK(lp::verify_min(C, QVector{1}, QVector{-1}, sol));

    // -y >= 1 is infeasible.
    const QMatrix D = QMatrix::from_rows({{-1}}, 1);
    sol = lp::lp_min(D, QVector{1}, QVector{1});
    CHECK(sol.status == lp::LPStatus::infeasible);
    CHECK(lp::verify_min(D, QVector{1}, QVector{1}, sol));
}

TEST_CASE("rank examples") {
    CHECK(lp::rank(QMatrix::identity(3)) == 3);
    CHECK(lp::rank(QMatrix(3, 4)) == 0);
    CHECK(lp::rank(triangle_matrix()) == 3);
    CHECK(lp::rank(QMatrix::from_rows({{1, 2}, {2, 4}}, 2)) == 1);
}

TEST_CASE("solve_square") {
    const auto x = lp::solve_square(triangle_matrix(), ones(3));
    REQUIRE(x);
    CHECK(*x == QVector{lp::make_rational(1, 2), lp::make_rational(1, 2), lp::make_rational(1, 2)});
    CHECK_FALSE(lp::solve_square(QMatrix::from_rows({{1, 2}, {2, 4}}, 2), QVector{1, 1}));
}

TEST_CASE("random programs agree with vertex enumeration and satisfy strong duality") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> size(1, 4), entry(0, 4), rhs(0, 6), obj(-2, 4);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t m = static_cast<std::size_t>(size(rng)), q = static_cast<std::size_t>(size(rng));
        QMatrix A(m, q);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < q; ++j) A(i, j) = entry(rng);
        // Make every column positive somewhere so the region is bounded.
        for (std::size_t j = 0; j < q; ++j) A(j % m, j) += 1;
        QVector b(m), c(q);
        for (std::size_t i = 0; i < m; ++i) b[i] = rhs(rng);
        for (std::size_t j = 0; j < q; ++j) c[j] = obj(rng);
        const auto sol = lp::lp_max(A, b, c);
        REQUIRE(sol.status == lp::LPStatus::optimal);
        CHECK(lp::verify_max(A, b, c, sol));
        CHECK(c.dot(*sol.primal) == b.dot(*sol.dual));
        CHECK(*oracle::lp_by_vertices(A, b, c, +1) == *sol.value);
    }
}

TEST_CASE("the solver is deterministic") {
    const QMatrix A = QMatrix::from_rows({{1, 1, 1}, {1, 1, 1}}, 3);
    const auto s1 = lp::lp_max(A, QVector{1, 1}, ones(3));
    const auto s2 = lp::lp_max(A, QVector{1, 1}, ones(3));
    CHECK(*s1.primal == *s2.primal);
    CHECK(*s1.dual == *s2.dual);
}
