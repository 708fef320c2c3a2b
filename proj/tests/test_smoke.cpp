#include <catch2/catch_amalgamated.hpp>
#include "cvxlat/cvxlat.hpp"

using namespace cvxlat;

static Point pt(std::initializer_list<int> xs) {
    Point p(xs.size());
    int i = 0;
    for (int x : xs) p(i++) = x;
    return p;
}

TEST_CASE("smoke: hull, meet, join, dim") {
    ConvexBody tri = ConvexBody::hull(2, {pt({0, 0}), pt({2, 0}), pt({0, 2}), pt({1, 1})});
    REQUIRE(tri.vertices().size() == 3);
    REQUIRE(dim(tri) == 2);
    ConvexBody seg = ConvexBody::segment(pt({0, 0}), pt({1, 1}));
    ConvexBody m = meet(tri, seg);
    REQUIRE(m == seg);
    ConvexBody j = join(tri, ConvexBody::point(pt({3, 3})));
    REQUIRE(j.vertices().size() == 4);
}

TEST_CASE("smoke: lp") {
    // max x+y st x<=1, y<=2, x,y>=0
    MatQ a(2, 2);
    a << 1, 0, 0, 1;
    VecQ b(2);
    b << 1, 2;
    VecQ c(2);
    c << 1, 1;
    auto r = simplex_max_nonneg(a, b, MatQ(0, 2), VecQ(0), c);
    REQUIRE(r.status == LpResult::Status::Optimal);
    REQUIRE(r.value == 3);
}
