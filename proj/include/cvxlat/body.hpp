#ifndef CVXLAT_BODY_HPP
#define CVXLAT_BODY_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "cvxlat/errors.hpp"
#include "cvxlat/lp.hpp"

namespace cvxlat {

using Point = VecQ;

/// Affine subspace in V-form: a base point plus linearly independent
/// directions. aff(emptyset) is the distinguished empty variant.
struct AffineSubspace {
    int ambient = 0;
    bool empty = true;
    Point base;
    std::vector<VecQ> directions;

    static AffineSubspace empty_subspace(int ambient_dim) {
        AffineSubspace s;
        s.ambient = ambient_dim;
        return s;
    }
    static AffineSubspace through(Point base_pt, std::vector<VecQ> dirs) {
        AffineSubspace s;
        s.ambient = static_cast<int>(base_pt.size());
        s.empty = false;
        s.base = std::move(base_pt);
        s.directions = std::move(dirs);
        return s;
    }
    int dim() const { return empty ? -1 : static_cast<int>(directions.size()); }
    bool contains(const Point& p) const {
        if (empty) return false;
        if (directions.empty()) return vec_eq(p, base);
        MatQ u(ambient, directions.size());
        for (std::size_t j = 0; j < directions.size(); ++j) u.col(j) = directions[j];
        return solve_any(u, p - base).has_value();
    }
};

/// Closed halfspace {x : <a,x> <= b}.
struct Halfspace {
    VecQ a;
    Rat b;
};

/// H-representation: affine-hull equalities plus facet inequalities.
struct HRep {
    std::vector<std::pair<VecQ, Rat>> eq;  // <a,x> = b
    std::vector<Halfspace> ineq;
};

namespace detail {

/// Coordinates on the affine hull of a point set: x = base + U t with U of
/// full column rank, t = P (x - base), P U = I.
struct Chart {
    Point base;
    MatQ basis;    // n x k
    MatQ leftinv;  // k x n

    int local_dim() const { return static_cast<int>(basis.cols()); }
    VecQ to_local(const Point& x) const {
        if (basis.cols() == 0) return VecQ(0);
        return leftinv * (x - base);
    }
    Point to_ambient(const VecQ& t) const {
        if (basis.cols() == 0) return base;
        return base + basis * t;
    }
};

inline Chart make_chart(const std::vector<Point>& pts) {
    Chart ch;
    ch.base = pts.front();
    const Eigen::Index n = ch.base.size();
    MatQ d(pts.size() - 1, n);
    for (std::size_t i = 1; i < pts.size(); ++i) d.row(i - 1) = (pts[i] - ch.base).transpose();
    std::vector<int> pivots = rref(d);
    const int k = static_cast<int>(pivots.size());
    ch.basis = MatQ(n, k);
    for (int j = 0; j < k; ++j) ch.basis.col(j) = d.row(j).transpose();
    if (k > 0) {
        MatQ gram = ch.basis.transpose() * ch.basis;  // invertible: full column rank
        MatQ inv(k, k);
        MatQ aug(k, 2 * k);
        aug.leftCols(k) = gram;
        aug.rightCols(k) = MatQ::Identity(k, k);
        rref(aug);
        inv = aug.rightCols(k);
        ch.leftinv = inv * ch.basis.transpose();
    } else {
        ch.leftinv = MatQ(0, n);
    }
    return ch;
}

inline void sort_unique(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end(), vec_eq), pts.end());
}

/// Removes every point lying in the hull of the others. The survivors are
/// exactly the extreme points.
inline void eliminate_redundant(std::vector<Point>& pts) {
    sort_unique(pts);
    if (pts.size() <= 2) return;
    Chart ch = make_chart(pts);
    std::vector<VecQ> local(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) local[i] = ch.to_local(pts[i]);
    // lexicographic extremes are always vertices; after sort_unique these are
    // the first and last entries
    std::vector<bool> alive(pts.size(), true);
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        std::vector<VecQ> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (alive[j] && j != i) others.push_back(local[j]);
        if (convex_weights(others, local[i]).has_value()) alive[i] = false;
    }
    std::vector<Point> out;
    out.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (alive[i]) out.push_back(pts[i]);
    pts = std::move(out);
}

}  // namespace detail

/// A convex body: a polytope in canonical minimal V-representation (vertices
/// lexicographically sorted), or the empty set.
class ConvexBody {
  public:
    ConvexBody() = default;

    static ConvexBody empty(int ambient_dim) {
        ConvexBody b;
        b.ambient_ = ambient_dim;
        return b;
    }

    /// Hull of an arbitrary point list; redundant points are eliminated and
    /// the result is stored canonically.
    static ConvexBody hull(int ambient_dim, std::vector<Point> pts) {
        for (const auto& p : pts)
            if (static_cast<int>(p.size()) != ambient_dim)
                throw DimensionMismatchError("hull: point dimension differs from ambient dimension");
        ConvexBody b;
        b.ambient_ = ambient_dim;
        detail::eliminate_redundant(pts);
        b.vertices_ = std::move(pts);
        return b;
    }

    static ConvexBody point(Point p) {
        ConvexBody b;
        b.ambient_ = static_cast<int>(p.size());
        b.vertices_.push_back(std::move(p));
        return b;
    }

    static ConvexBody segment(Point p, Point q) {
        const int n = static_cast<int>(p.size());
        return hull(n, {std::move(p), std::move(q)});
    }

    int ambient_dim() const { return ambient_; }
    bool is_empty() const { return vertices_.empty(); }
    const std::vector<Point>& vertices() const { return vertices_; }

    bool operator==(const ConvexBody& o) const {
        if (ambient_ != o.ambient_ || vertices_.size() != o.vertices_.size()) return false;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (!vec_eq(vertices_[i], o.vertices_[i])) return false;
        return true;
    }
    bool operator!=(const ConvexBody& o) const { return !(*this == o); }

  private:
    int ambient_ = 0;
    std::vector<Point> vertices_;
};

inline ConvexBody convex_hull(int ambient_dim, const std::vector<Point>& pts) {
    return ConvexBody::hull(ambient_dim, pts);
}

/// dim(C): -1 for the empty set, else the affine rank of the vertex set.
inline int dim(const ConvexBody& c) {
    if (c.is_empty()) return -1;
    return affine_rank(c.vertices());
}

inline AffineSubspace affine_hull(const ConvexBody& c) {
    if (c.is_empty()) return AffineSubspace::empty_subspace(c.ambient_dim());
    detail::Chart ch = detail::make_chart(c.vertices());
    std::vector<VecQ> dirs;
    for (Eigen::Index j = 0; j < ch.basis.cols(); ++j) dirs.push_back(ch.basis.col(j));
    return AffineSubspace::through(c.vertices().front(), std::move(dirs));
}

/// Exact membership via barycentric LP.
inline bool contains(const ConvexBody& c, const Point& p) {
    if (c.is_empty()) return false;
    if (static_cast<int>(p.size()) != c.ambient_dim())
        throw DimensionMismatchError("contains: point dimension differs from body dimension");
    return convex_weights(c.vertices(), p).has_value();
}

inline bool subset(const ConvexBody& inner, const ConvexBody& outer) {
    if (inner.is_empty()) return true;
    if (outer.is_empty()) return false;
    for (const auto& v : inner.vertices())
        if (!contains(outer, v)) return false;
    return true;
}

namespace detail {

inline void canonical_halfspace(VecQ& a, Rat& b) {
    Int scale = 1;
    for (Eigen::Index i = 0; i < a.size(); ++i) scale = lcm(scale, denominator(a(i)));
    scale = lcm(scale, denominator(b));
    a *= Rat(scale);
    b *= Rat(scale);
    Int g = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) g = gcd(g, numerator(a(i)));
    g = gcd(g, numerator(b));
    if (g > 1) {
        a /= Rat(g);
        b /= Rat(g);
    }
}

struct HalfspaceLess {
    bool operator()(const Halfspace& x, const Halfspace& y) const {
        if (lex_less(x.a, y.a)) return true;
        if (lex_less(y.a, x.a)) return false;
        return x.b < y.b;
    }
};

}  // namespace detail

/// V-to-H conversion. Facets are enumerated by brute force over vertex
/// subsets spanning hyperplanes of the body's affine hull; fine for the
/// dimensions (<= 5) this library targets.
inline HRep h_representation(const ConvexBody& c) {
    if (c.is_empty()) throw Error("h_representation: empty body has no H-form");
    HRep h;
    const auto& verts = c.vertices();
    const Eigen::Index n = c.ambient_dim();
    detail::Chart ch = detail::make_chart(verts);
    const int k = ch.local_dim();

    // affine-hull equalities: w spans the orthogonal complement of the basis
    if (k < n) {
        MatQ ut(k, n);
        for (int j = 0; j < k; ++j) ut.row(j) = ch.basis.col(j).transpose();
        for (const VecQ& w : kernel_basis(ut)) {
            VecQ a = w;
            Rat b = dot(w, ch.base);
            detail::canonical_halfspace(a, b);
            h.eq.emplace_back(a, b);
        }
    }
    if (k == 0) return h;

    std::vector<VecQ> local(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) local[i] = ch.to_local(verts[i]);

    std::vector<Halfspace> facets;
    std::vector<int> idx(k);
    const int m = static_cast<int>(verts.size());
    // iterate over all k-subsets of vertices
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        do {
            MatQ d(k - 1, k);
            for (int i = 1; i < k; ++i) d.row(i - 1) = (local[idx[i]] - local[idx[0]]).transpose();
            auto kern = kernel_basis(d);
            if (kern.size() != 1) break;  // does not span a hyperplane
            VecQ a = kern[0];
            Rat b = dot(a, local[idx[0]]);
            bool above = false, below = false;
            for (const auto& t : local) {
                const Rat s = dot(a, t);
                if (s > b) above = true;
                if (s < b) below = true;
                if (above && below) break;
            }
            if (above && below) break;  // not supporting
            if (above) { a = -a; b = -b; }
            detail::canonical_halfspace(a, b);
            facets.push_back({std::move(a), b});
        } while (false);
        // next combination
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::sort(facets.begin(), facets.end(), detail::HalfspaceLess{});
    facets.erase(std::unique(facets.begin(), facets.end(),
                             [](const Halfspace& x, const Halfspace& y) {
                                 return vec_eq(x.a, y.a) && x.b == y.b;
                             }),
                 facets.end());
    // lift local inequalities back to ambient coordinates
    for (auto& f : facets) {
        VecQ a = ch.leftinv.transpose() * f.a;
        Rat b = f.b + dot(a, ch.base);
        detail::canonical_halfspace(a, b);
        h.ineq.push_back({std::move(a), b});
    }
    return h;
}

namespace detail {

/// One halfspace-clipping step on a raw point list (not canonicalized):
/// keeps inside points and all keep/drop segment crossings.
inline std::vector<Point> clip_points(const std::vector<Point>& pts, const Halfspace& hs) {
    std::vector<Point> keep, drop;
    std::vector<Rat> skeep, sdrop;
    for (const auto& p : pts) {
        const Rat s = dot(hs.a, p) - hs.b;
        if (s <= 0) {
            keep.push_back(p);
            skeep.push_back(s);
        } else {
            drop.push_back(p);
            sdrop.push_back(s);
        }
    }
    if (drop.empty()) return keep;
    std::vector<Point> out = keep;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (skeep[i] == 0) continue;  // already on the hyperplane
        for (std::size_t j = 0; j < drop.size(); ++j) {
            // crossing of [keep_i, drop_j] with the hyperplane
            const Rat denom = sdrop[j] - skeep[i];
            out.push_back((sdrop[j] * keep[i] - skeep[i] * drop[j]) / denom);
        }
    }
    sort_unique(out);
    return out;
}

}  // namespace detail

/// Intersection with a single halfspace.
inline ConvexBody clip(const ConvexBody& c, const Halfspace& hs) {
    if (c.is_empty()) return c;
    auto pts = detail::clip_points(c.vertices(), hs);
    return ConvexBody::hull(c.ambient_dim(), std::move(pts));
}

/// C AND D: exact intersection, computed by clipping one body's V-form with
/// the other's H-form.
inline ConvexBody meet(const ConvexBody& c, const ConvexBody& d) {
    if (c.ambient_dim() != d.ambient_dim())
        throw DimensionMismatchError("meet: ambient dimensions differ");
    if (c.is_empty() || d.is_empty()) return ConvexBody::empty(c.ambient_dim());
    // enumerate facets of the body with fewer vertices, clip the other
    const ConvexBody& hrep_side = d.vertices().size() <= c.vertices().size() ? d : c;
    const ConvexBody& vrep_side = d.vertices().size() <= c.vertices().size() ? c : d;
    HRep h = h_representation(hrep_side);
    std::vector<Point> pts = vrep_side.vertices();
    auto apply = [&](const Halfspace& hs) {
        if (pts.empty()) return;
        pts = detail::clip_points(pts, hs);
        if (pts.size() > 32) detail::eliminate_redundant(pts);
    };
    for (const auto& [a, b] : h.eq) {
        apply({a, b});
        apply({-a, -b});
    }
    for (const auto& hs : h.ineq) apply(hs);
    return ConvexBody::hull(c.ambient_dim(), std::move(pts));
}

/// C OR D: hull of the union of vertex sets.
inline ConvexBody join(const ConvexBody& c, const ConvexBody& d) {
    if (c.ambient_dim() != d.ambient_dim())
        throw DimensionMismatchError("join: ambient dimensions differ");
    std::vector<Point> pts = c.vertices();
    pts.insert(pts.end(), d.vertices().begin(), d.vertices().end());
    return ConvexBody::hull(c.ambient_dim(), std::move(pts));
}

}  // namespace cvxlat

#endif
