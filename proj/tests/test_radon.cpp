#include <catch2/catch_amalgamated.hpp>

#include "cvxlat/generate.hpp"
#include "cvxlat/radon.hpp"
#include "test_helpers.hpp"

using namespace cvxlat;
using namespace cvxlat::testing;

namespace {

bool partition_valid(const RadonPartition& p, int n) {
    if (p.red.empty() || p.blue.empty()) return false;
    ConvexBody hr = convex_hull(n, p.red);
    ConvexBody hb = convex_hull(n, p.blue);
    ConvexBody both = meet(hr, hb);
    return !both.is_empty() && contains(hr, p.witness) && contains(hb, p.witness);
}

/// Brute force over all bipartitions: the valid ones, as sorted vertex pairs.
std::vector<std::pair<std::vector<Point>, std::vector<Point>>> valid_bipartitions(
    int n, const std::vector<Point>& pts) {
    std::vector<std::pair<std::vector<Point>, std::vector<Point>>> out;
    const int m = static_cast<int>(pts.size());
    for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
        std::vector<Point> a, b;
        for (int i = 0; i < m; ++i) ((mask >> i) & 1u ? a : b).push_back(pts[i]);
        ConvexBody ha = convex_hull(n, a);
        ConvexBody hb = convex_hull(n, b);
        if (!meet(ha, hb).is_empty()) out.emplace_back(a, b);
    }
    return out;
}

bool same_point_set(std::vector<Point> a, std::vector<Point> b) {
    std::sort(a.begin(), a.end(), lex_less);
    std::sort(b.begin(), b.end(), lex_less);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!vec_eq(a[i], b[i])) return false;
    return true;
}

}  // namespace

TEST_CASE("radon: triangle plus its inner point") {
    std::vector<Point> pts = {pt({0, 0}), pt({2, 0}), pt({0, 2}), pt({1, 1})};
    RadonPartition p = radon_partition(2, pts);
    REQUIRE(p.red.size() == 1);
    REQUIRE(vec_eq(p.red[0], pt({1, 1})));
    REQUIRE(p.blue.size() == 3);
    REQUIRE(vec_eq(p.witness, pt({1, 1})));
    REQUIRE(partition_valid(p, 2));
}

TEST_CASE("radon: collinear points") {
    std::vector<Point> pts = {pt({0, 0}), pt({1, 0}), pt({2, 0}), pt({3, 0})};
    RadonPartition p = radon_partition(2, pts);
    REQUIRE(partition_valid(p, 2));
    // brute force confirms ours is among the valid bipartitions
    bool found = false;
    for (const auto& [a, b] : valid_bipartitions(2, pts)) {
        if ((same_point_set(a, p.red) && same_point_set(b, p.blue)) ||
            (same_point_set(b, p.red) && same_point_set(a, p.blue)))
            found = true;
    }
    REQUIRE(found);
}

TEST_CASE("radon: simplex vertices plus centroid in 3-space") {
    std::vector<Point> pts = {pt({0, 0, 0}), pt({4, 0, 0}), pt({0, 4, 0}), pt({0, 0, 4}),
                              pt({1, 1, 1})};
    RadonPartition p = radon_partition(3, pts);
    REQUIRE(p.red.size() == 1);
    REQUIRE(vec_eq(p.red[0], pt({1, 1, 1})));
    REQUIRE(p.blue.size() == 4);
    REQUIRE(partition_valid(p, 3));
}

TEST_CASE("radon: too few points") {
    REQUIRE_THROWS_AS(radon_partition(2, {pt({0, 0}), pt({1, 1}), pt({2, 0})}),
                      InsufficientPointsError);
}

TEST_CASE("radon: random sets validate and match brute force") {
    Rng rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform(0, 1));
        std::vector<Point> pts;
        for (int i = 0; i < n + 2; ++i) pts.push_back(rng.point(n));
        RadonPartition p = radon_partition(n, pts);
        REQUIRE(partition_valid(p, n));
        auto valids = valid_bipartitions(n, pts);
        REQUIRE_FALSE(valids.empty());
        bool found = false;
        for (const auto& [a, b] : valids) {
            if ((same_point_set(a, p.red) && same_point_set(b, p.blue)) ||
                (same_point_set(b, p.red) && same_point_set(a, p.blue)))
                found = true;
        }
        REQUIRE(found);
    }
}

TEST_CASE("radon: extra points beyond n+2 are tolerated") {
    Rng rng(808);
    std::vector<Point> pts;
    for (int i = 0; i < 7; ++i) pts.push_back(rng.point(3));
    RadonPartition p = radon_partition(3, pts);
    REQUIRE(partition_valid(p, 3));
    REQUIRE(p.red.size() + p.blue.size() == pts.size());
}
