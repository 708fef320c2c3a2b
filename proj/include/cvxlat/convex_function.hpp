#ifndef CVXLAT_CONVEX_FUNCTION_HPP
#define CVXLAT_CONVEX_FUNCTION_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cvxlat/affine_map.hpp"
#include "cvxlat/body.hpp"

namespace cvxlat {

/// Rational value extended with the two lattice bounds.
struct ExtRat {
    enum class Kind { Finite, PlusInf, MinusInf };
    Kind kind = Kind::Finite;
    Rat value;

    static ExtRat finite(Rat v) { return {Kind::Finite, std::move(v)}; }
    static ExtRat plus_inf() { return {Kind::PlusInf, Rat(0)}; }
    static ExtRat minus_inf() { return {Kind::MinusInf, Rat(0)}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool operator==(const ExtRat& o) const {
        if (kind != o.kind) return false;
        return kind != Kind::Finite || value == o.value;
    }
    bool operator<=(const ExtRat& o) const {
        if (kind == Kind::MinusInf || o.kind == Kind::PlusInf) return true;
        if (kind == Kind::PlusInf) return o.kind == Kind::PlusInf;
        if (o.kind == Kind::MinusInf) return false;
        return value <= o.value;
    }
};

namespace detail {

/// Upward completion within the band [0, M]: hull of the vertices and their
/// lifts to height M. Realizes epi-closure of a polytope inside the slab.
inline ConvexBody ceiling_complete(const ConvexBody& body, const Rat& height) {
    if (body.is_empty()) return body;
    const int n = body.ambient_dim();
    std::vector<Point> pts = body.vertices();
    for (const auto& v : body.vertices()) {
        Point lifted = v;
        lifted(n - 1) = height;
        pts.push_back(std::move(lifted));
    }
    return ConvexBody::hull(n, std::move(pts));
}

inline Rat min_height(const ConvexBody& body) {
    Rat m = body.vertices().front()(body.ambient_dim() - 1);
    for (const auto& v : body.vertices()) m = std::min(m, Rat(v(body.ambient_dim() - 1)));
    return m;
}

inline Rat max_height(const ConvexBody& body) {
    Rat m = body.vertices().front()(body.ambient_dim() - 1);
    for (const auto& v : body.vertices()) m = std::max(m, Rat(v(body.ambient_dim() - 1)));
    return m;
}

}  // namespace detail

/// Element of Cvx_[0,kappa]: a convex function with values in [0,kappa] on a
/// compact domain, attaining 0, stored as the band-truncated epigraph
/// polytope in one dimension up (ceiling-completed so the representation is
/// canonical), or the top element plus-infinity.
class TruncatedEpigraph {
  public:
    static TruncatedEpigraph plus_infinity(int c, Rat kappa) {
        TruncatedEpigraph f;
        f.c_ = c;
        f.kappa_ = std::move(kappa);
        f.plus_inf_ = true;
        f.body_ = ConvexBody::empty(c + 1);
        return f;
    }

    /// Wraps a polytope in E^{c+1} as a truncated epigraph. The body must lie
    /// in the band, attain height 0, and is ceiling-completed.
    static TruncatedEpigraph from_body(Rat kappa, const ConvexBody& raw) {
        TruncatedEpigraph f = from_band_body(std::move(kappa), raw);
        if (!f.plus_inf_ && detail::min_height(f.body_) != 0)
            throw ClassViolationError("TruncatedEpigraph: function must attain 0");
        return f;
    }

    /// Like from_body but without the attainment requirement; admits band
    /// polytopes such as C x {kappa} that represent shifted functions outside
    /// the lattice class.
    static TruncatedEpigraph from_band_body(Rat kappa, const ConvexBody& raw) {
        if (kappa <= 0) throw InputError("TruncatedEpigraph: kappa must be positive");
        const int c = raw.ambient_dim() - 1;
        if (c < 0) throw InputError("TruncatedEpigraph: ambient dimension must be >= 1");
        if (raw.is_empty()) return plus_infinity(c, std::move(kappa));
        if (detail::max_height(raw) > kappa)
            throw ClassViolationError("TruncatedEpigraph: heights exceed kappa");
        if (detail::min_height(raw) < 0)
            throw ClassViolationError("TruncatedEpigraph: negative heights");
        TruncatedEpigraph f;
        f.c_ = c;
        f.kappa_ = std::move(kappa);
        f.plus_inf_ = false;
        f.body_ = detail::ceiling_complete(raw, f.kappa_);
        return f;
    }

    int domain_dim() const { return c_; }
    const Rat& kappa() const { return kappa_; }
    bool is_plus_inf() const { return plus_inf_; }
    const ConvexBody& body() const { return body_; }

    /// Exact evaluation: min {t : (x,t) in body}, +infinity off the domain.
    ExtRat eval(const Point& x) const {
        if (static_cast<int>(x.size()) != c_)
            throw DimensionMismatchError("TruncatedEpigraph: point of wrong dimension");
        if (plus_inf_) return ExtRat::plus_inf();
        const auto& verts = body_.vertices();
        const Eigen::Index k = static_cast<Eigen::Index>(verts.size());
        MatQ e(c_ + 1, k);
        VecQ f(c_ + 1);
        VecQ cost(k);
        for (Eigen::Index j = 0; j < k; ++j) {
            e.col(j).head(c_) = verts[j].head(c_);
            e(c_, j) = 1;
            cost(j) = -verts[j](c_);  // maximize -t
        }
        f.head(c_) = x;
        f(c_) = 1;
        auto r = simplex_max_nonneg(MatQ(0, k), VecQ(0), e, f, cost);
        if (r.status != LpResult::Status::Optimal) return ExtRat::plus_inf();
        return ExtRat::finite(-r.value);
    }

    /// Domain of finiteness: the floor projection of the body.
    ConvexBody domain() const {
        if (plus_inf_) return ConvexBody::empty(c_);
        std::vector<Point> pts;
        for (const auto& v : body_.vertices()) pts.push_back(v.head(c_));
        return ConvexBody::hull(c_, std::move(pts));
    }

    bool operator==(const TruncatedEpigraph& o) const {
        if (c_ != o.c_ || kappa_ != o.kappa_ || plus_inf_ != o.plus_inf_) return false;
        return plus_inf_ || body_ == o.body_;
    }
    bool operator!=(const TruncatedEpigraph& o) const { return !(*this == o); }

  private:
    int c_ = 0;
    Rat kappa_ = 1;
    bool plus_inf_ = true;
    ConvexBody body_;
};

/// Element of Cvx_(0,0)^kappa: a finite max of affine pieces
/// y -> max_i(<a_i, y> - b_i), or the bottom element minus-infinity. Stored
/// canonically: dominated pieces removed, pieces sorted.
class MaxAffineFunction {
  public:
    using Piece = std::pair<VecQ, Rat>;  // (slope a, intercept b)

    static MaxAffineFunction minus_infinity(int c) {
        MaxAffineFunction g;
        g.c_ = c;
        g.minus_inf_ = true;
        return g;
    }

    static MaxAffineFunction from_pieces(int c, std::vector<Piece> pieces) {
        if (pieces.empty()) throw InputError("MaxAffineFunction: empty piece set");
        for (const auto& [a, b] : pieces)
            if (static_cast<int>(a.size()) != c)
                throw DimensionMismatchError("MaxAffineFunction: slope of wrong dimension");
        MaxAffineFunction g;
        g.c_ = c;
        g.minus_inf_ = false;
        g.pieces_ = canonicalize(c, std::move(pieces));
        return g;
    }

    int domain_dim() const { return c_; }
    bool is_minus_inf() const { return minus_inf_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    ExtRat eval(const Point& y) const {
        if (static_cast<int>(y.size()) != c_)
            throw DimensionMismatchError("MaxAffineFunction: point of wrong dimension");
        if (minus_inf_) return ExtRat::minus_inf();
        Rat best = dot(pieces_[0].first, y) - pieces_[0].second;
        for (std::size_t i = 1; i < pieces_.size(); ++i)
            best = std::max(best, Rat(dot(pieces_[i].first, y) - pieces_[i].second));
        return ExtRat::finite(best);
    }

    bool operator==(const MaxAffineFunction& o) const {
        if (c_ != o.c_ || minus_inf_ != o.minus_inf_ || pieces_.size() != o.pieces_.size())
            return false;
        for (std::size_t i = 0; i < pieces_.size(); ++i)
            if (!vec_eq(pieces_[i].first, o.pieces_[i].first) ||
                pieces_[i].second != o.pieces_[i].second)
                return false;
        return true;
    }
    bool operator!=(const MaxAffineFunction& o) const { return !(*this == o); }

  private:
    /// A piece survives iff its lifted point (a, b) is a vertex of the lower
    /// hull conv{(a_i,b_i)} + cone(+e_b); dominated pieces never change the
    /// function value.
    static std::vector<Piece> canonicalize(int c, std::vector<Piece> pieces) {
        std::vector<Point> lifted;
        for (const auto& [a, b] : pieces) {
            Point p(c + 1);
            p.head(c) = a;
            p(c) = b;
            lifted.push_back(std::move(p));
        }
        detail::sort_unique(lifted);
        std::vector<bool> alive(lifted.size(), true);
        for (std::size_t i = 0; i < lifted.size(); ++i) {
            std::vector<VecQ> others;
            for (std::size_t j = 0; j < lifted.size(); ++j)
                if (alive[j] && j != i) others.push_back(lifted[j]);
            if (others.empty()) break;
            // feasibility: sum w a_j = a_i, sum w = 1, sum w b_j <= b_i, w >= 0
            const Eigen::Index k = static_cast<Eigen::Index>(others.size());
            MatQ e(c + 1, k);
            VecQ f(c + 1);
            MatQ ineq(1, k);
            VecQ rhs(1);
            for (Eigen::Index j = 0; j < k; ++j) {
                e.col(j).head(c) = others[j].head(c);
                e(c, j) = 1;
                ineq(0, j) = others[j](c);
            }
            f.head(c) = lifted[i].head(c);
            f(c) = 1;
            rhs(0) = lifted[i](c);
            if (feasible_point_nonneg(ineq, rhs, e, f, k).has_value()) alive[i] = false;
        }
        std::vector<Piece> out;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (alive[i]) out.emplace_back(lifted[i].head(c), lifted[i](c));
        return out;
    }

    int c_ = 0;
    bool minus_inf_ = true;
    std::vector<Piece> pieces_;
};

/// 1^inf_C truncated at kappa: the prism C x [0, kappa]; the empty body
/// yields plus-infinity.
inline TruncatedEpigraph indicator(const ConvexBody& c, const Rat& kappa) {
    if (c.is_empty()) return TruncatedEpigraph::plus_infinity(c.ambient_dim(), kappa);
    std::vector<Point> pts;
    for (const auto& v : c.vertices()) {
        Point p(c.ambient_dim() + 1);
        p.head(c.ambient_dim()) = v;
        p(c.ambient_dim()) = 0;
        pts.push_back(std::move(p));
    }
    return TruncatedEpigraph::from_body(kappa, ConvexBody::hull(c.ambient_dim() + 1, pts));
}

/// h_C(y) = sup_{x in C} <x|y>; pieces (v, 0) over the vertices. h_empty is
/// minus-infinity.
inline MaxAffineFunction support_function(const ConvexBody& c) {
    if (c.is_empty()) return MaxAffineFunction::minus_infinity(c.ambient_dim());
    std::vector<MaxAffineFunction::Piece> pieces;
    for (const auto& v : c.vertices()) pieces.emplace_back(v, Rat(0));
    return MaxAffineFunction::from_pieces(c.ambient_dim(), std::move(pieces));
}

/// Legendre-Fenchel transform of a truncated epigraph: the conjugate is the
/// max over the body's vertices (x_j, t_j) of <x_j|y> - t_j.
inline MaxAffineFunction fenchel(const TruncatedEpigraph& f) {
    if (f.is_plus_inf()) return MaxAffineFunction::minus_infinity(f.domain_dim());
    std::vector<MaxAffineFunction::Piece> pieces;
    for (const auto& v : f.body().vertices())
        pieces.emplace_back(v.head(f.domain_dim()), Rat(v(f.domain_dim())));
    return MaxAffineFunction::from_pieces(f.domain_dim(), std::move(pieces));
}

/// Membership certificate for Cvx_(0,0)^kappa: the slope hull C sandwiches g
/// between h_C - kappa and h_C. On canonical pieces this is exactly
/// min b = 0 and max b <= kappa.
struct SandwichCert {
    ConvexBody slope_hull;
    std::vector<Rat> lower_gap;  // g - (h_C - kappa) at the sample points
    std::vector<Rat> upper_gap;  // h_C - g at the sample points
};

inline std::optional<SandwichCert> sandwich_certificate(const MaxAffineFunction& g,
                                                        const Rat& kappa,
                                                        const std::vector<Point>& samples = {}) {
    if (g.is_minus_inf()) return std::nullopt;
    Rat bmin = g.pieces().front().second, bmax = bmin;
    for (const auto& [a, b] : g.pieces()) {
        bmin = std::min(bmin, b);
        bmax = std::max(bmax, b);
    }
    if (bmin != 0 || bmax > kappa) return std::nullopt;
    SandwichCert cert;
    std::vector<Point> slopes;
    for (const auto& [a, b] : g.pieces()) slopes.push_back(a);
    cert.slope_hull = ConvexBody::hull(g.domain_dim(), slopes);
    MaxAffineFunction h = support_function(cert.slope_hull);
    for (const auto& y : samples) {
        const Rat gy = g.eval(y).value;
        const Rat hy = h.eval(y).value;
        cert.lower_gap.push_back(gy - (hy - kappa));
        cert.upper_gap.push_back(hy - gy);
    }
    return cert;
}

/// Inverse transform: the unique truncated epigraph with the given
/// conjugate. Requires g in Cvx_(0,0)^kappa.
inline TruncatedEpigraph fenchel_inverse(const MaxAffineFunction& g, const Rat& kappa) {
    if (g.is_minus_inf()) return TruncatedEpigraph::plus_infinity(g.domain_dim(), kappa);
    if (!sandwich_certificate(g, kappa))
        throw ClassViolationError("fenchel_inverse: function is not in Cvx_(0,0)^kappa");
    std::vector<Point> pts;
    const int c = g.domain_dim();
    for (const auto& [a, b] : g.pieces()) {
        Point p(c + 1);
        p.head(c) = a;
        p(c) = b;
        pts.push_back(std::move(p));
    }
    return TruncatedEpigraph::from_body(kappa, ConvexBody::hull(c + 1, pts));
}

/// Least upper bound in Cvx_[0,kappa] (pointwise max): intersection of the
/// truncated epigraphs, or plus-infinity when the max never reaches 0.
inline TruncatedEpigraph meet_plus(const TruncatedEpigraph& f, const TruncatedEpigraph& g) {
    if (f.kappa() != g.kappa()) throw InputError("meet_plus: kappa mismatch");
    if (f.domain_dim() != g.domain_dim()) throw DimensionMismatchError("meet_plus: dimensions");
    if (f.is_plus_inf() || g.is_plus_inf())
        return TruncatedEpigraph::plus_infinity(f.domain_dim(), f.kappa());
    ConvexBody both = meet(f.body(), g.body());
    if (both.is_empty() || detail::min_height(both) != 0)
        return TruncatedEpigraph::plus_infinity(f.domain_dim(), f.kappa());
    return TruncatedEpigraph::from_body(f.kappa(), both);
}

/// Greatest lower bound in Cvx_[0,kappa] (convex envelope of the min): the
/// band-truncated hull of the union.
inline TruncatedEpigraph join_plus(const TruncatedEpigraph& f, const TruncatedEpigraph& g) {
    if (f.kappa() != g.kappa()) throw InputError("join_plus: kappa mismatch");
    if (f.domain_dim() != g.domain_dim()) throw DimensionMismatchError("join_plus: dimensions");
    if (f.is_plus_inf()) return g;
    if (g.is_plus_inf()) return f;
    return TruncatedEpigraph::from_body(f.kappa(), join(f.body(), g.body()));
}

/// Least upper bound in Cvx_(0,0) (pointwise max): union of the piece sets.
inline MaxAffineFunction meet_minus(const MaxAffineFunction& g1, const MaxAffineFunction& g2) {
    if (g1.domain_dim() != g2.domain_dim())
        throw DimensionMismatchError("meet_minus: dimensions");
    if (g1.is_minus_inf()) return g2;
    if (g2.is_minus_inf()) return g1;
    if (g1.eval(VecQ::Zero(g1.domain_dim())) != ExtRat::finite(Rat(0)) ||
        g2.eval(VecQ::Zero(g2.domain_dim())) != ExtRat::finite(Rat(0)))
        throw ClassViolationError("meet_minus: inputs must vanish at 0");
    std::vector<MaxAffineFunction::Piece> pieces = g1.pieces();
    pieces.insert(pieces.end(), g2.pieces().begin(), g2.pieces().end());
    return MaxAffineFunction::from_pieces(g1.domain_dim(), std::move(pieces));
}

/// Greatest lower bound in Cvx_(0,0): the convexified pointwise min when it
/// still vanishes at 0, minus-infinity otherwise.
inline MaxAffineFunction join_minus(const MaxAffineFunction& g1, const MaxAffineFunction& g2) {
    if (g1.domain_dim() != g2.domain_dim())
        throw DimensionMismatchError("join_minus: dimensions");
    const int c = g1.domain_dim();
    if (g1.is_minus_inf() || g2.is_minus_inf()) return MaxAffineFunction::minus_infinity(c);
    if (g1.eval(VecQ::Zero(c)) != ExtRat::finite(Rat(0)) ||
        g2.eval(VecQ::Zero(c)) != ExtRat::finite(Rat(0)))
        throw ClassViolationError("join_minus: inputs must vanish at 0");
    // envelope pieces = vertices of the intersection of the two lifted
    // epigraphs conv(P_i) + cone(e_b); cap the cone at a height above every
    // intercept, intersect, and keep the vertices below the cap
    Rat cap = g1.pieces().front().second;
    auto lifted = [&](const MaxAffineFunction& g) {
        std::vector<Point> pts;
        for (const auto& [a, b] : g.pieces()) {
            Point p(c + 1);
            p.head(c) = a;
            p(c) = b;
            cap = std::max(cap, b);
            pts.push_back(std::move(p));
        }
        return pts;
    };
    std::vector<Point> p1 = lifted(g1), p2 = lifted(g2);
    cap += 1;
    ConvexBody e1 = detail::ceiling_complete(ConvexBody::hull(c + 1, p1), cap);
    ConvexBody e2 = detail::ceiling_complete(ConvexBody::hull(c + 1, p2), cap);
    ConvexBody q = meet(e1, e2);
    if (q.is_empty()) return MaxAffineFunction::minus_infinity(c);
    std::vector<MaxAffineFunction::Piece> pieces;
    for (const auto& v : q.vertices())
        if (v(c) < cap) pieces.emplace_back(v.head(c), Rat(v(c)));
    if (pieces.empty()) return MaxAffineFunction::minus_infinity(c);
    MaxAffineFunction env = MaxAffineFunction::from_pieces(c, std::move(pieces));
    if (env.eval(VecQ::Zero(c)) != ExtRat::finite(Rat(0)))
        return MaxAffineFunction::minus_infinity(c);
    return env;
}

/// Theorem-form homomorphism into the function lattice: C -> 1^inf_{phi(C)}.
inline std::function<TruncatedEpigraph(const ConvexBody&)> canonical_function_homomorphism(
    const AffineMap& phi, Rat kappa) {
    if (phi.source_dim() != phi.target_dim())
        throw RankDeficientError("canonical_function_homomorphism: phi must be bijective");
    return [phi, kappa](const ConvexBody& c) { return indicator(phi.apply(c), kappa); };
}

/// Theorem-form anti-homomorphism: C -> L[1^inf_{phi(C)}] = h_{phi(C)}.
inline std::function<MaxAffineFunction(const ConvexBody&)> canonical_anti_homomorphism(
    const AffineMap& phi, Rat /*kappa*/) {
    if (phi.source_dim() != phi.target_dim())
        throw RankDeficientError("canonical_anti_homomorphism: phi must be bijective");
    return [phi](const ConvexBody& c) { return support_function(phi.apply(c)); };
}

}  // namespace cvxlat

#endif
