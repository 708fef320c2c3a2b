#include <catch2/catch_amalgamated.hpp>

#include "cvxlat/homomorphism.hpp"
#include "test_helpers.hpp"

using namespace cvxlat;
using namespace cvxlat::testing;

namespace {

AffineMap embed_last(int c, const Rat& level) {
    // x -> (x, level)
    MatQ m = MatQ::Zero(c + 1, c);
    for (int i = 0; i < c; ++i) m(i, i) = 1;
    VecQ t = VecQ::Zero(c + 1);
    t(c) = level;
    return AffineMap(std::move(m), std::move(t));
}

}  // namespace

TEST_CASE("apply_point per case") {
    SECTION("case iv formula") {
        HomomorphismSpec s = HomomorphismSpec::case_iv(embed_last(3, 1), VecQ::Zero(4), q("1/2"));
        ConvexBody img = apply_point(s, pt({2, 0, 0}));
        REQUIRE(img == ConvexBody::segment(pt({2, 0, 0, 1}), ptq({"1", "0", "0", "1/2"})));
    }
    SECTION("case ii formula, plane plumbing") {
        HomomorphismSpec s = HomomorphismSpec::case_ii(embed_last(2, 1), VecQ::Zero(3));
        ConvexBody img = apply_point(s, pt({1, 1}));
        REQUIRE(img == ConvexBody::segment(pt({1, 1, 1}), pt({0, 0, 0})));
    }
    SECTION("case i with the identity") {
        MatQ id = MatQ::Identity(3, 3);
        HomomorphismSpec s = HomomorphismSpec::case_i(AffineMap(id, VecQ::Zero(3)));
        REQUIRE(apply_point(s, pt({4, 5, 6})) == ConvexBody::point(pt({4, 5, 6})));
    }
    SECTION("dimension mismatch") {
        HomomorphismSpec s = HomomorphismSpec::case_ii(embed_last(3, 1), VecQ::Zero(4));
        REQUIRE_THROWS_AS(apply_point(s, pt({0, 0})), DimensionMismatchError);
    }
}

TEST_CASE("apply_body") {
    SECTION("case iii segment becomes a box, matching the sampling oracle") {
        VecQ v = VecQ::Zero(4);
        v(3) = 1;
        HomomorphismSpec s = HomomorphismSpec::case_iii(embed_last(3, 0), v);
        ConvexBody seg = ConvexBody::segment(pt({0, 0, 0}), pt({1, 0, 0}));
        ConvexBody img = apply_body(s, seg);
        ConvexBody expect = convex_hull(
            4, {pt({0, 0, 0, 0}), pt({1, 0, 0, 0}), pt({0, 0, 0, 1}), pt({1, 0, 0, 1})});
        REQUIRE(img == expect);
        // dense-sampling union oracle: hull of 50 point images equals the same
        std::vector<Point> samples;
        for (int k = 0; k <= 49; ++k) {
            Rat lambda(Int(k), Int(49));
            Point x = lambda * pt({1, 0, 0}) + (1 - lambda) * pt({0, 0, 0});
            ConvexBody px = apply_point(s, x);
            for (const auto& w : px.vertices()) samples.push_back(w);
        }
        REQUIRE(convex_hull(4, samples) == expect);
    }
    SECTION("empty set per case") {
        HomomorphismSpec s2 = HomomorphismSpec::case_ii(embed_last(3, 1), VecQ::Zero(4));
        REQUIRE(apply_body(s2, ConvexBody::empty(3)) == ConvexBody::point(VecQ::Zero(4)));
        VecQ v = VecQ::Zero(4);
        v(3) = 2;
        HomomorphismSpec s3 = HomomorphismSpec::case_iii(embed_last(3, 0), v);
        REQUIRE(apply_body(s3, ConvexBody::empty(3)).is_empty());
        HomomorphismSpec s1 = HomomorphismSpec::case_i(embed_last(3, 1));
        REQUIRE(apply_body(s1, ConvexBody::empty(3)).is_empty());
    }
    SECTION("case i acts vertexwise") {
        Rng rng(5);
        HomomorphismSpec s = HomomorphismSpec::case_i(rng.injection(3, 4));
        ConvexBody c = rng.body(3);
        REQUIRE(apply_body(s, c) == s.phi().apply(c));
    }
    SECTION("trivial spec is constant") {
        ConvexBody fixed = convex_hull(4, {pt({0, 0, 0, 0}), pt({1, 1, 1, 1})});
        HomomorphismSpec s = HomomorphismSpec::trivial(3, fixed);
        Rng rng(6);
        REQUIRE(apply_body(s, rng.body(3)) == fixed);
        REQUIRE(apply_body(s, ConvexBody::empty(3)) == fixed);
    }
}

TEST_CASE("spec constructors enforce the case constraints") {
    SECTION("case ii rejects o on the hyperplane") {
        Point o = VecQ::Zero(4);
        o(3) = 1;  // embed level is 1, so o lies on the image
        REQUIRE_THROWS(HomomorphismSpec::case_ii(embed_last(3, 1), o));
    }
    SECTION("case iii rejects v parallel to the hyperplane and v = 0") {
        VecQ v = VecQ::Zero(4);
        v(0) = 1;  // parallel to the embedded copy of E^3
        REQUIRE_THROWS(HomomorphismSpec::case_iii(embed_last(3, 0), v));
        REQUIRE_THROWS(HomomorphismSpec::case_iii(embed_last(3, 0), VecQ::Zero(4)));
    }
    SECTION("case iv rejects gamma outside (0,1)") {
        REQUIRE_THROWS(HomomorphismSpec::case_iv(embed_last(3, 1), VecQ::Zero(4), Rat(0)));
        REQUIRE_THROWS(HomomorphismSpec::case_iv(embed_last(3, 1), VecQ::Zero(4), Rat(1)));
        REQUIRE_THROWS(HomomorphismSpec::case_iv(embed_last(3, 1), VecQ::Zero(4), Rat(2)));
    }
    SECTION("case iii canonicalizes the displacement to lex-positive") {
        VecQ v = VecQ::Zero(4);
        v(3) = -2;
        HomomorphismSpec s = HomomorphismSpec::case_iii(embed_last(3, 0), v);
        REQUIRE(s.v()(3) == 2);
        // same map: the image of a point is the same segment
        ConvexBody img = apply_point(s, pt({1, 2, 3}));
        REQUIRE(img == ConvexBody::segment(pt({1, 2, 3, -2}), pt({1, 2, 3, 0})));
    }
}

TEST_CASE("verify_homomorphism accepts canonical specs") {
    Rng rng(99);
    for (HomCase tag : {HomCase::I, HomCase::II, HomCase::III, HomCase::IV, HomCase::Trivial}) {
        HomomorphismSpec s = random_spec(tag, 3, rng);
        VerificationReport rep = verify_homomorphism(s, 12, 1234);
        INFO(hom_case_name(tag));
        REQUIRE(rep.all_ok());
        REQUIRE_FALSE(rep.counterexample.has_value());
    }
}

TEST_CASE("verify_homomorphism refutes the lifted bounding box") {
    // C -> bbox(C) x {0}: meet-compatible enough to survive, join fails
    const int c = 3;
    BodyMap bbox_lift;
    bbox_lift.source_dim = c;
    bbox_lift.target_dim = c + 1;
    bbox_lift.fn = [c](const ConvexBody& body) {
        if (body.is_empty()) return ConvexBody::empty(c + 1);
        std::vector<Point> corners;
        VecQ lo = body.vertices().front(), hi = lo;
        for (const auto& v : body.vertices())
            for (int i = 0; i < c; ++i) {
                lo(i) = std::min(lo(i), v(i));
                hi(i) = std::max(hi(i), v(i));
            }
        for (int mask = 0; mask < (1 << c); ++mask) {
            Point p(c + 1);
            for (int i = 0; i < c; ++i) p(i) = (mask >> i) & 1 ? hi(i) : lo(i);
            p(c) = 0;
            corners.push_back(std::move(p));
        }
        return ConvexBody::hull(c + 1, corners);
    };
    VerificationReport rep = verify_homomorphism(bbox_lift, 40, 4321);
    REQUIRE_FALSE(rep.axiom_join_ok);
    REQUIRE(rep.counterexample.has_value());
}

TEST_CASE("verify_homomorphism rejects malformed subjects") {
    BodyMap bad;
    bad.source_dim = 3;
    bad.target_dim = 4;
    bad.fn = [](const ConvexBody& body) { return body; };  // wrong ambient dimension
    REQUIRE_THROWS_AS(verify_homomorphism(bad, 1, 1), MalformedSubjectError);
}

TEST_CASE("image disjointness and injectivity on points") {
    Rng rng(123);
    for (HomCase tag : {HomCase::III, HomCase::IV}) {
        HomomorphismSpec s = random_spec(tag, 3, rng);
        for (int t = 0; t < 10; ++t) {
            Point x = rng.point(3), y = rng.point(3);
            if (vec_eq(x, y)) continue;
            ConvexBody ix = apply_point(s, x), iy = apply_point(s, y);
            REQUIRE(ix != iy);
            REQUIRE(meet(ix, iy).is_empty());
        }
    }
    // case ii: images share exactly the empty-set image {o}
    HomomorphismSpec s2 = random_spec(HomCase::II, 3, rng);
    for (int t = 0; t < 10; ++t) {
        Point x = rng.point(3), y = rng.point(3);
        if (vec_eq(x, y)) continue;
        ConvexBody both = meet(apply_point(s2, x), apply_point(s2, y));
        REQUIRE(both == ConvexBody::point(s2.o()));
        REQUIRE(subset(both, apply_point(s2, x)));
        REQUIRE(apply_point(s2, x) != both);  // strict containment of Phi(empty)
    }
}

TEST_CASE("case iv geometry: rays from o, endpoints on parallel hyperplanes") {
    Rng rng(321);
    HomomorphismSpec s = random_spec(HomCase::IV, 3, rng);
    for (int t = 0; t < 10; ++t) {
        Point x = rng.point(3);
        Point far = s.phi().apply(x);
        Point near = s.gamma() * far + (1 - s.gamma()) * s.o();
        ConvexBody img = apply_point(s, x);
        REQUIRE(contains(img, far));
        REQUIRE(contains(img, near));
        REQUIRE(vec_eq(near - s.o(), s.gamma() * (far - s.o())));
        REQUIRE(s.phi().image_contains(far));
        REQUIRE_FALSE(s.phi().image_contains(near));  // G is parallel to H, disjoint from it
    }
}

TEST_CASE("case iii geometry: translates by v") {
    Rng rng(654);
    HomomorphismSpec s = random_spec(HomCase::III, 3, rng);
    for (int t = 0; t < 10; ++t) {
        Point x = rng.point(3);
        ConvexBody img = apply_point(s, x);
        Point base = s.phi().apply(x);
        REQUIRE(img == ConvexBody::segment(base, base + s.v()));
    }
}

TEST_CASE("dimension laws and the per-case profile") {
    Rng rng(777);
    std::vector<ConvexBody> bodies;
    for (int k = -1; k <= 3; ++k)
        for (int rep = 0; rep < 3; ++rep) bodies.push_back(rng.body_of_dim(3, k));

    SECTION("case i preserves dimension") {
        auto r = check_dimension_laws(random_spec(HomCase::I, 3, rng), bodies);
        REQUIRE(r.all_ok());
        for (const auto& e : r.entries) REQUIRE(e.dim_image == e.dim_source);
    }
    SECTION("case ii raises every dimension by one") {
        auto r = check_dimension_laws(random_spec(HomCase::II, 3, rng), bodies);
        REQUIRE(r.all_ok());
        for (const auto& e : r.entries) REQUIRE(e.dim_image == e.dim_source + 1);
    }
    SECTION("cases iii/iv have the dimension gap") {
        for (HomCase tag : {HomCase::III, HomCase::IV}) {
            auto r = check_dimension_laws(random_spec(tag, 3, rng), bodies);
            REQUIRE(r.all_ok());
            for (const auto& e : r.entries) {
                if (e.dim_source == -1) REQUIRE(e.dim_image == -1);
                else REQUIRE(e.dim_image == e.dim_source + 1);
            }
        }
    }
    SECTION("trivial spec rejected") {
        REQUIRE_THROWS_AS(
            check_dimension_laws(HomomorphismSpec::trivial(3, ConvexBody::empty(4)), bodies),
            InputError);
    }
}
