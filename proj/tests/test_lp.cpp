#include <catch2/catch_amalgamated.hpp>

#include "cvxlat/lp.hpp"
#include "test_helpers.hpp"

using namespace cvxlat;
using namespace cvxlat::testing;

TEST_CASE("simplex solves a textbook problem") {
    // max 3x + 2y  s.t.  x + y <= 4, x + 3y <= 6, x,y >= 0  -> (4,0), value 12
    MatQ a(2, 2);
    a << 1, 1, 1, 3;
    VecQ b(2);
    b << 4, 6;
    VecQ c(2);
    c << 3, 2;
    auto r = simplex_max_nonneg(a, b, MatQ(0, 2), VecQ(0), c);
    REQUIRE(r.status == LpResult::Status::Optimal);
    REQUIRE(r.value == 12);
    REQUIRE(r.x(0) == 4);
    REQUIRE(r.x(1) == 0);
}

TEST_CASE("simplex detects infeasibility") {
    MatQ a(2, 1);
    a << 1, -1;
    VecQ b(2);
    b << 1, -2;  // x <= 1 and x >= 2
    auto r = simplex_max_nonneg(a, b, MatQ(0, 1), VecQ(0), VecQ::Zero(1));
    REQUIRE(r.status == LpResult::Status::Infeasible);
}

TEST_CASE("simplex detects unboundedness") {
    MatQ a(1, 1);
    a << -1;
    VecQ b(1);
    b << 0;
    VecQ c(1);
    c << 1;
    auto r = simplex_max_nonneg(a, b, MatQ(0, 1), VecQ(0), c);
    REQUIRE(r.status == LpResult::Status::Unbounded);
}

TEST_CASE("equality constraints and exact rational optimum") {
    // max x  s.t.  2x + 3y = 1, x,y >= 0  -> x = 1/2
    MatQ e(1, 2);
    e << 2, 3;
    VecQ f(1);
    f << 1;
    VecQ c(2);
    c << 1, 0;
    auto r = simplex_max_nonneg(MatQ(0, 2), VecQ(0), e, f, c);
    REQUIRE(r.status == LpResult::Status::Optimal);
    REQUIRE(r.value == q("1/2"));
}

TEST_CASE("free-variable wrapper reaches negative coordinates") {
    // max -x  s.t.  x >= -3  (as -x <= 3), x free  -> x = -3
    MatQ a(1, 1);
    a << -1;
    VecQ b(1);
    b << 3;
    VecQ c(1);
    c << -1;
    auto r = simplex_max_free(a, b, MatQ(0, 1), VecQ(0), c);
    REQUIRE(r.status == LpResult::Status::Optimal);
    REQUIRE(r.x(0) == -3);
    REQUIRE(r.value == 3);
}

TEST_CASE("degenerate problems terminate (Bland)") {
    // classic degenerate cube-like instance; exercising many ties
    MatQ a(4, 2);
    a << 1, 0, 0, 1, 1, 1, 1, -1;
    VecQ b(4);
    b << 1, 1, 1, 1;
    VecQ c(2);
    c << 1, 1;
    auto r = simplex_max_nonneg(a, b, MatQ(0, 2), VecQ(0), c);
    REQUIRE(r.status == LpResult::Status::Optimal);
    REQUIRE(r.value == 1);
}

TEST_CASE("convex_weights recovers barycentric coordinates") {
    std::vector<VecQ> gens = {pt({0, 0}), pt({2, 0}), pt({0, 2})};
    auto w = convex_weights(gens, pt({1, 1}));
    REQUIRE(w.has_value());
    REQUIRE((*w)(0) + (*w)(1) + (*w)(2) == 1);
    VecQ recon = (*w)(0) * gens[0] + (*w)(1) * gens[1] + (*w)(2) * gens[2];
    REQUIRE(vec_eq(recon, pt({1, 1})));
    REQUIRE_FALSE(convex_weights(gens, pt({3, 3})).has_value());
}

TEST_CASE("redundant equality rows are dropped, not fatal") {
    // x + y = 1 listed twice
    MatQ e(2, 2);
    e << 1, 1, 1, 1;
    VecQ f(2);
    f << 1, 1;
    VecQ c(2);
    c << 0, 1;
    auto r = simplex_max_nonneg(MatQ(0, 2), VecQ(0), e, f, c);
    REQUIRE(r.status == LpResult::Status::Optimal);
    REQUIRE(r.value == 1);
}
