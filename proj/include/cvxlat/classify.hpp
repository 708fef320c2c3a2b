#ifndef CVXLAT_CLASSIFY_HPP
#define CVXLAT_CLASSIFY_HPP

#include <array>
#include <utility>
#include <vector>

#include "cvxlat/homomorphism.hpp"

namespace cvxlat {

/// Oracle access to an unknown homomorphism: its value on the empty set and
/// on finitely many singletons.
struct OracleSample {
    int c = 0;
    int d = 0;
    ConvexBody empty_image;
    std::vector<std::pair<Point, ConvexBody>> point_images;
};

struct ClassifiedForm {
    HomomorphismSpec spec;
    bool residual_ok = false;  // every sample reproduced exactly
};

/// Exact affine interpolation through point correspondences: solves through
/// c+1 affinely independent pairs and verifies every surplus pair.
inline AffineMap fit_affine_map(const std::vector<std::pair<Point, Point>>& pairs, int c, int d) {
    if (static_cast<int>(pairs.size()) < c + 1)
        throw InsufficientPointsError("fit_affine_map: need at least c+1 pairs");
    const Eigen::Index m = static_cast<Eigen::Index>(pairs.size());
    MatQ sys(m, c + 1);
    for (Eigen::Index i = 0; i < m; ++i) {
        if (static_cast<int>(pairs[i].first.size()) != c ||
            static_cast<int>(pairs[i].second.size()) != d)
            throw DimensionMismatchError("fit_affine_map: pair of wrong dimension");
        sys.row(i).head(c) = pairs[i].first.transpose();
        sys(i, c) = 1;
    }
    {
        MatQ probe = sys;
        if (static_cast<int>(rref(probe).size()) != c + 1)
            throw RankDeficientError("fit_affine_map: sources are affinely dependent");
    }
    // solve row-wise: for each target coordinate j, [x 1] . (m_j, t_j) = y_j
    MatQ matrix(d, c);
    VecQ offset(d);
    for (int j = 0; j < d; ++j) {
        VecQ y(m);
        for (Eigen::Index i = 0; i < m; ++i) y(i) = pairs[i].second(j);
        auto sol = solve_any(sys, y);
        if (!sol) throw NonAffineDataError("fit_affine_map: surplus pair breaks affineness");
        matrix.row(j) = sol->head(c).transpose();
        offset(j) = (*sol)(c);
    }
    for (const auto& [x, y] : pairs) {
        if (!vec_eq(matrix * x + offset, y))
            throw NonAffineDataError("fit_affine_map: surplus pair breaks affineness");
    }
    if (rank(matrix) != c)
        throw RankDeficientError("fit_affine_map: fitted map is not injective");
    return AffineMap(std::move(matrix), std::move(offset));
}

/// True iff the point map sends every middle point strictly between the
/// images of its neighbours. Triples index into the pair list; the middle
/// element is the second index.
inline bool check_order_preservation(const std::vector<std::pair<Point, Point>>& point_pairs,
                                     const std::vector<std::array<int, 3>>& triples) {
    auto strictly_between = [](const Point& a, const Point& mid, const Point& b) {
        // mid = a + t (b - a) with t strictly inside (0,1)
        const VecQ dir = b - a;
        if (is_zero(dir)) return false;
        Rat t;
        bool have_t = false;
        for (Eigen::Index i = 0; i < dir.size(); ++i) {
            if (dir(i) == 0) {
                if (mid(i) != a(i)) return false;
                continue;
            }
            const Rat ti = (mid(i) - a(i)) / dir(i);
            if (!have_t) { t = ti; have_t = true; }
            else if (ti != t) return false;
        }
        return have_t && t > 0 && t < 1;
    };
    for (const auto& tri : triples) {
        for (int ix : tri)
            if (ix < 0 || ix >= static_cast<int>(point_pairs.size()))
                throw InputError("check_order_preservation: triple index out of range");
        const auto& [xa, ya] = point_pairs[tri[0]];
        const auto& [xm, ym] = point_pairs[tri[1]];
        const auto& [xb, yb] = point_pairs[tri[2]];
        if (!strictly_between(xa, xm, xb))
            throw InputError("check_order_preservation: middle point is not strictly between "
                             "its neighbours");
        if (!strictly_between(ya, ym, yb)) return false;
    }
    return true;
}

namespace detail {

inline bool parallel_dirs(const VecQ& u, const VecQ& w) {
    MatQ m(2, u.size());
    m.row(0) = u.transpose();
    m.row(1) = w.transpose();
    return rank(m) <= 1;
}

/// Intersection point of two non-parallel lines p + t u and q + s w, or
/// nullopt when the lines are skew.
inline std::optional<Point> line_intersection(const Point& p, const VecQ& u, const Point& q,
                                              const VecQ& w) {
    MatQ sys(u.size(), 2);
    sys.col(0) = u;
    sys.col(1) = -w;
    auto ts = solve_unique(sys, q - p);
    if (!ts) return std::nullopt;
    return p + (*ts)(0) * u;
}

inline void validate_sample(const OracleSample& sample) {
    if (sample.c < 2) throw InputError("classify: source dimension must be >= 2");
    if (sample.d != sample.c && sample.d != sample.c + 1)
        throw InputError("classify: target dimension must be c or c+1");
    if (static_cast<int>(sample.point_images.size()) < sample.c + 2)
        throw InsufficientPointsError("classify: need at least c+2 samples");
    std::vector<Point> sources;
    for (const auto& [x, img] : sample.point_images) {
        if (static_cast<int>(x.size()) != sample.c)
            throw DimensionMismatchError("classify: sample point of wrong dimension");
        if (img.ambient_dim() != sample.d)
            throw DimensionMismatchError("classify: image of wrong ambient dimension");
        if (img.is_empty())
            throw InconsistencyError("classify: a singleton image is empty");
        if (img.vertices().size() > 2)
            throw InconsistencyError(
                "classify: an image is neither a point nor a segment (dimension bound violated)");
        sources.push_back(x);
    }
    if (affine_rank(sources) != sample.c)
        throw RankDeficientError("classify: sample points do not affinely span the source space");
    if (!sample.empty_image.is_empty() && sample.empty_image.ambient_dim() != sample.d)
        throw DimensionMismatchError("classify: empty-set image of wrong ambient dimension");
}

}  // namespace detail

/// Recovers the canonical form behind an oracle sample: the case tag and the
/// exact parameters phi, o, v, gamma. Samples no canonical form reproduces
/// are rejected.
inline ClassifiedForm classify(const OracleSample& sample) {
    detail::validate_sample(sample);
    const int c = sample.c, d = sample.d;

    bool any_segment = false, any_point = false;
    for (const auto& [x, img] : sample.point_images)
        (img.vertices().size() == 2 ? any_segment : any_point) = true;

    auto finish = [&](HomomorphismSpec spec) {
        for (const auto& [x, img] : sample.point_images) {
            if (apply_point(spec, x) != img)
                throw NotCanonicalError("classify: recovered form does not reproduce a sample");
        }
        if (apply_body(spec, ConvexBody::empty(c)) != sample.empty_image)
            throw NotCanonicalError("classify: recovered form does not reproduce the empty set");
        return ClassifiedForm{std::move(spec), true};
    };

    if (!sample.empty_image.is_empty()) {
        // Case (ii): the empty set maps to {o}; every image is a proper
        // segment with o as an endpoint, and phi(x) is the other endpoint.
        if (sample.empty_image.vertices().size() != 1)
            throw InconsistencyError("classify: image of the empty set must be a single point");
        if (d != c + 1)
            throw InconsistencyError("classify: a non-empty empty-set image needs d = c+1");
        const Point o = sample.empty_image.vertices().front();
        std::vector<std::pair<Point, Point>> pairs;
        for (const auto& [x, img] : sample.point_images) {
            if (img.vertices().size() != 2)
                throw InconsistencyError("classify: empty set maps to a point but a singleton "
                                         "image is not a proper segment");
            const Point& a = img.vertices()[0];
            const Point& b = img.vertices()[1];
            if (vec_eq(a, o)) pairs.emplace_back(x, b);
            else if (vec_eq(b, o)) pairs.emplace_back(x, a);
            else
                throw InconsistencyError("classify: segment image misses the empty-set image "
                                         "point as an endpoint");
        }
        AffineMap phi = fit_affine_map(pairs, c, d);
        try {
            return finish(HomomorphismSpec::case_ii(std::move(phi), o));
        } catch (const Error& e) {
            throw NotCanonicalError(std::string("classify: case-ii constraints violated: ") +
                                    e.what());
        }
    }

    if (any_segment && any_point)
        throw InconsistencyError("classify: mixed point and segment images with empty empty-set "
                                 "image contradict the case profiles");

    if (!any_segment) {
        // Case (i) (covers the endomorphism setting d = c as well)
        std::vector<std::pair<Point, Point>> pairs;
        for (const auto& [x, img] : sample.point_images)
            pairs.emplace_back(x, img.vertices().front());
        AffineMap phi = fit_affine_map(pairs, c, d);
        try {
            return finish(HomomorphismSpec::case_i(std::move(phi)));
        } catch (const Error& e) {
            throw NotCanonicalError(std::string("classify: case-i constraints violated: ") +
                                    e.what());
        }
    }

    // Dimension-raising with empty set fixed: cases (iii) and (iv)
    if (c == 2)
        throw UnsupportedOpenCaseError(
            "classify: dimension-raising homomorphisms in the plane are not characterized");
    if (d != c + 1)
        throw InconsistencyError("classify: segment images need d = c+1");

    struct Seg {
        Point x;
        Point a, b;  // lex-sorted endpoints
        VecQ dir;    // b - a, lex-positive
    };
    std::vector<Seg> segs;
    for (const auto& [x, img] : sample.point_images) {
        if (img.vertices().size() != 2)
            throw InconsistencyError("classify: expected all images to be proper segments");
        Seg s{x, img.vertices()[0], img.vertices()[1], img.vertices()[1] - img.vertices()[0]};
        segs.push_back(std::move(s));
    }

    bool all_parallel = true;
    for (std::size_t i = 1; i < segs.size(); ++i)
        if (!detail::parallel_dirs(segs[0].dir, segs[i].dir)) { all_parallel = false; break; }

    if (all_parallel) {
        // Case (iii): every segment is the translate of its base endpoint by
        // one common vector; lex-sorted endpoints give the canonical
        // orientation directly.
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (!vec_eq(segs[i].dir, segs[0].dir))
                throw NotCanonicalError("classify: parallel segments of unequal displacement");
        std::vector<std::pair<Point, Point>> pairs;
        for (const auto& s : segs) pairs.emplace_back(s.x, s.a);
        AffineMap phi = fit_affine_map(pairs, c, d);
        try {
            return finish(HomomorphismSpec::case_iii(std::move(phi), segs[0].dir));
        } catch (const Error& e) {
            throw NotCanonicalError(std::string("classify: case-iii constraints violated: ") +
                                    e.what());
        }
    }

    // Case (iv): segment lines must be pairwise non-parallel and concurrent.
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j)
            if (detail::parallel_dirs(segs[i].dir, segs[j].dir))
                throw NotCanonicalError(
                    "classify: segment family mixes parallel and non-parallel lines");
    auto o_opt = detail::line_intersection(segs[0].a, segs[0].dir, segs[1].a, segs[1].dir);
    if (!o_opt) throw NotCanonicalError("classify: segment lines are skew; no common apex");
    const Point o = *o_opt;
    Rat gamma;
    bool have_gamma = false;
    std::vector<std::pair<Point, Point>> pairs;
    for (const auto& s : segs) {
        // both endpoints on the ray from o: a = o + ta dir, b = o + tb dir
        MatQ m(d, 1);
        m.col(0) = s.dir;
        auto ta = solve_unique(m, s.a - o);
        auto tb = solve_unique(m, s.b - o);
        if (!ta || !tb)
            throw NotCanonicalError("classify: a segment line misses the common apex");
        Rat pa = (*ta)(0), pb = (*tb)(0);
        if (pa * pb <= 0)
            throw NotCanonicalError("classify: a segment touches or straddles the apex");
        // phi(x) is the endpoint farther from o; the near endpoint sits at
        // gamma of the way out
        const bool a_far = abs(pa) > abs(pb);
        const Point& far = a_far ? s.a : s.b;
        const Point& near = a_far ? s.b : s.a;
        const Rat g = (a_far ? pb : pa) / (a_far ? pa : pb);
        if (!have_gamma) { gamma = g; have_gamma = true; }
        else if (g != gamma)
            throw NotCanonicalError("classify: per-sample ray ratios disagree; no single gamma");
        if (!vec_eq(near - o, gamma * (far - o)))
            throw NotCanonicalError("classify: endpoint is not on the gamma-ray of the apex");
        pairs.emplace_back(s.x, far);
    }
    AffineMap phi = fit_affine_map(pairs, c, d);
    try {
        return finish(HomomorphismSpec::case_iv(std::move(phi), o, gamma));
    } catch (const Error& e) {
        throw NotCanonicalError(std::string("classify: case-iv constraints violated: ") + e.what());
    }
}

/// Draws the admissible minimal oracle sample (c+1 affinely independent
/// sources plus one consistency point) from a canonical spec.
inline OracleSample sample_from_spec(const HomomorphismSpec& s, Rng& rng) {
    const int c = s.source_dim();
    std::vector<Point> sources;
    for (;;) {
        sources.clear();
        for (int i = 0; i < c + 1; ++i) sources.push_back(rng.point(c));
        if (affine_rank(sources) == c) break;
    }
    sources.push_back(rng.point(c));  // consistency point
    OracleSample sample;
    sample.c = c;
    sample.d = s.target_dim();
    sample.empty_image = apply_body(s, ConvexBody::empty(c));
    for (const auto& x : sources) sample.point_images.emplace_back(x, apply_point(s, x));
    return sample;
}

}  // namespace cvxlat

#endif
