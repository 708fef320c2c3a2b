#ifndef CVXLAT_HOMOMORPHISM_HPP
#define CVXLAT_HOMOMORPHISM_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cvxlat/affine_map.hpp"
#include "cvxlat/body.hpp"
#include "cvxlat/generate.hpp"

namespace cvxlat {

enum class HomCase { Trivial, I, II, III, IV };

inline const char* hom_case_name(HomCase c) {
    switch (c) {
        case HomCase::Trivial: return "trivial";
        case HomCase::I: return "i";
        case HomCase::II: return "ii";
        case HomCase::III: return "iii";
        case HomCase::IV: return "iv";
    }
    return "?";
}

/// Canonical form of a lattice homomorphism between body lattices: the
/// constant map, a point map along an affine bijection, or one of the three
/// dimension-raising segment maps. Construction validates the case
/// constraints (o off the image hyperplane, v transversal to it, gamma
/// strictly between 0 and 1).
class HomomorphismSpec {
  public:
    static HomomorphismSpec trivial(int c, ConvexBody fixed) {
        HomomorphismSpec s;
        s.tag_ = HomCase::Trivial;
        s.c_ = c;
        s.d_ = fixed.ambient_dim();
        s.fixed_ = std::move(fixed);
        return s;
    }

    static HomomorphismSpec case_i(AffineMap phi) {
        check_source(phi);
        if (phi.target_dim() != phi.source_dim() && phi.target_dim() != phi.source_dim() + 1)
            throw DimensionMismatchError("case i: target dimension must be c or c+1");
        HomomorphismSpec s;
        s.tag_ = HomCase::I;
        s.c_ = phi.source_dim();
        s.d_ = phi.target_dim();
        s.phi_ = std::move(phi);
        return s;
    }

    static HomomorphismSpec case_ii(AffineMap phi, Point o) {
        check_source(phi);
        check_raising(phi);
        if (static_cast<int>(o.size()) != phi.target_dim())
            throw DimensionMismatchError("case ii: o of wrong dimension");
        if (phi.image_contains(o))
            throw Error("case ii: o lies on the image hyperplane");
        HomomorphismSpec s;
        s.tag_ = HomCase::II;
        s.c_ = phi.source_dim();
        s.d_ = phi.target_dim();
        s.phi_ = std::move(phi);
        s.o_ = std::move(o);
        return s;
    }

    static HomomorphismSpec case_iii(AffineMap phi, VecQ v) {
        check_source(phi);
        check_raising(phi);
        if (static_cast<int>(v.size()) != phi.target_dim())
            throw DimensionMismatchError("case iii: v of wrong dimension");
        if (is_zero(v)) throw Error("case iii: v must be nonzero");
        if (phi.direction_in_image(v))
            throw Error("case iii: v is parallel to the image hyperplane");
        // canonical orientation: [phi(x), phi(x)+v] equals [phi'(x), phi'(x)-v]
        // with phi' = phi + v; store the lex-positive direction
        bool flip = false;
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (v(i) != 0) { flip = v(i) < 0; break; }
        }
        if (flip) {
            AffineMap shifted(phi.matrix(), phi.offset() + v);
            phi = std::move(shifted);
            v = -v;
        }
        HomomorphismSpec s;
        s.tag_ = HomCase::III;
        s.c_ = phi.source_dim();
        s.d_ = phi.target_dim();
        s.phi_ = std::move(phi);
        s.v_ = std::move(v);
        return s;
    }

    static HomomorphismSpec case_iv(AffineMap phi, Point o, Rat gamma) {
        check_source(phi);
        check_raising(phi);
        if (static_cast<int>(o.size()) != phi.target_dim())
            throw DimensionMismatchError("case iv: o of wrong dimension");
        if (gamma <= 0 || gamma >= 1) throw Error("case iv: gamma must lie strictly in (0,1)");
        if (phi.image_contains(o))
            throw Error("case iv: o lies on the image hyperplane");
        HomomorphismSpec s;
        s.tag_ = HomCase::IV;
        s.c_ = phi.source_dim();
        s.d_ = phi.target_dim();
        s.phi_ = std::move(phi);
        s.o_ = std::move(o);
        s.gamma_ = std::move(gamma);
        return s;
    }

    HomCase tag() const { return tag_; }
    int source_dim() const { return c_; }
    int target_dim() const { return d_; }
    const AffineMap& phi() const { return *phi_; }
    const Point& o() const { return *o_; }
    const VecQ& v() const { return *v_; }
    const Rat& gamma() const { return *gamma_; }
    const ConvexBody& fixed_body() const { return *fixed_; }
    bool has_phi() const { return phi_.has_value(); }
    bool has_o() const { return o_.has_value(); }
    bool has_v() const { return v_.has_value(); }
    bool has_gamma() const { return gamma_.has_value(); }

    bool operator==(const HomomorphismSpec& s) const {
        if (tag_ != s.tag_ || c_ != s.c_ || d_ != s.d_) return false;
        if (phi_.has_value() != s.phi_.has_value()) return false;
        if (phi_ && !(*phi_ == *s.phi_)) return false;
        if (o_.has_value() != s.o_.has_value()) return false;
        if (o_ && !vec_eq(*o_, *s.o_)) return false;
        if (v_.has_value() != s.v_.has_value()) return false;
        if (v_ && !vec_eq(*v_, *s.v_)) return false;
        if (gamma_.has_value() != s.gamma_.has_value()) return false;
        if (gamma_ && *gamma_ != *s.gamma_) return false;
        if (fixed_.has_value() != s.fixed_.has_value()) return false;
        if (fixed_ && *fixed_ != *s.fixed_) return false;
        return true;
    }

  private:
    static void check_source(const AffineMap& phi) {
        if (phi.source_dim() < 2)
            throw DimensionMismatchError("homomorphism spec: source dimension must be >= 2");
    }
    static void check_raising(const AffineMap& phi) {
        if (phi.target_dim() != phi.source_dim() + 1)
            throw DimensionMismatchError("dimension-raising case: target dimension must be c+1");
    }

    HomCase tag_ = HomCase::Trivial;
    int c_ = 0, d_ = 0;
    std::optional<AffineMap> phi_;
    std::optional<Point> o_;
    std::optional<VecQ> v_;
    std::optional<Rat> gamma_;
    std::optional<ConvexBody> fixed_;
};

/// Image of a one-point set under the canonical form.
inline ConvexBody apply_point(const HomomorphismSpec& s, const Point& x) {
    if (static_cast<int>(x.size()) != s.source_dim())
        throw DimensionMismatchError("apply_point: point of wrong dimension");
    switch (s.tag()) {
        case HomCase::Trivial:
            return s.fixed_body();
        case HomCase::I:
            return ConvexBody::point(s.phi().apply(x));
        case HomCase::II:
            return ConvexBody::segment(s.phi().apply(x), s.o());
        case HomCase::III: {
            Point p = s.phi().apply(x);
            return ConvexBody::segment(p, p + s.v());
        }
        case HomCase::IV: {
            Point p = s.phi().apply(x);
            Point q = s.gamma() * p + (1 - s.gamma()) * s.o();
            return ConvexBody::segment(std::move(p), std::move(q));
        }
    }
    throw Error("apply_point: unknown case");
}

/// Image of a body: the union over its points, realized as the hull of the
/// vertex-segment endpoints (each case maps segment endpoints affinely, so
/// this hull equals the pointwise union).
inline ConvexBody apply_body(const HomomorphismSpec& s, const ConvexBody& c) {
    if (c.ambient_dim() != s.source_dim())
        throw DimensionMismatchError("apply_body: body of wrong dimension");
    if (s.tag() == HomCase::Trivial) return s.fixed_body();
    if (c.is_empty()) {
        if (s.tag() == HomCase::II) return ConvexBody::point(s.o());
        return ConvexBody::empty(s.target_dim());
    }
    std::vector<Point> pts;
    for (const auto& v : c.vertices()) {
        ConvexBody img = apply_point(s, v);
        for (const auto& w : img.vertices()) pts.push_back(w);
    }
    return ConvexBody::hull(s.target_dim(), std::move(pts));
}

/// Any map from bodies to bodies, as handed to the verifier.
struct BodyMap {
    int source_dim = 0;
    int target_dim = 0;
    std::function<ConvexBody(const ConvexBody&)> fn;

    ConvexBody operator()(const ConvexBody& c) const {
        ConvexBody out = fn(c);
        if (out.ambient_dim() != target_dim)
            throw MalformedSubjectError("subject returned body of ambient dimension " +
                                        std::to_string(out.ambient_dim()) + ", expected " +
                                        std::to_string(target_dim));
        return out;
    }
};

inline BodyMap as_body_map(const HomomorphismSpec& s) {
    return BodyMap{s.source_dim(), s.target_dim(),
                   [s](const ConvexBody& c) { return apply_body(s, c); }};
}

struct Counterexample {
    std::string which;  // failed identity or condition
    ConvexBody c, d;
    ConvexBody lhs, rhs;
};

struct VerificationReport {
    bool axiom_meet_ok = true;
    bool axiom_join_ok = true;
    bool cond_i_ok = true;
    bool cond_ii_ok = true;
    bool cond_iii_ok = true;
    bool cond_iv_ok = true;
    int trials = 0;
    std::optional<Counterexample> counterexample;

    bool all_ok() const {
        return axiom_meet_ok && axiom_join_ok && cond_i_ok && cond_ii_ok && cond_iii_ok &&
               cond_iv_ok;
    }
};

/// Randomized exact verification of the homomorphism axioms and the four
/// sufficient conditions, on seeded random body pairs. The first failure of
/// each kind is recorded; the meet/join counterexample keeps both sides.
inline VerificationReport verify_homomorphism(const BodyMap& subject, int trials,
                                              std::uint64_t seed) {
    if (trials < 1) throw InputError("verify_homomorphism: trials must be >= 1");
    const int c = subject.source_dim;
    VerificationReport rep;
    rep.trials = trials;
    const ConvexBody empty_image = subject(ConvexBody::empty(c));

    auto record = [&](bool& flag, const std::string& which, const ConvexBody& bc,
                      const ConvexBody& bd, const ConvexBody& lhs, const ConvexBody& rhs) {
        if (flag) {
            flag = false;
            if (!rep.counterexample) rep.counterexample = Counterexample{which, bc, bd, lhs, rhs};
        }
    };

    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
        const ConvexBody bc = rng.body(c, /*allow_empty=*/true);
        const ConvexBody bd = rng.body(c, /*allow_empty=*/true);
        const ConvexBody ic = subject(bc), id = subject(bd);

        ConvexBody lhs = subject(meet(bc, bd));
        ConvexBody rhs = meet(ic, id);
        if (lhs != rhs) record(rep.axiom_meet_ok, "meet-axiom", bc, bd, lhs, rhs);
        lhs = subject(join(bc, bd));
        rhs = join(ic, id);
        if (lhs != rhs) record(rep.axiom_join_ok, "join-axiom", bc, bd, lhs, rhs);

        // Condition (i): x in C implies subject({x}) inside subject(C)
        if (!bc.is_empty()) {
            const Point x = rng.point_in(bc);
            const ConvexBody ix = subject(ConvexBody::point(x));
            if (!subset(ix, ic))
                record(rep.cond_i_ok, "condition-i", ConvexBody::point(x), bc, ix, ic);
        }
        // Condition (ii): x outside C implies the images meet exactly in the
        // image of the empty set
        {
            Point x = rng.point(c);
            bool outside = bc.is_empty() || !contains(bc, x);
            if (outside) {
                const ConvexBody ix = subject(ConvexBody::point(x));
                const ConvexBody both = meet(ix, ic);
                if (both != empty_image)
                    record(rep.cond_ii_ok, "condition-ii", ConvexBody::point(x), bc, both,
                           empty_image);
            }
        }
        // Condition (iii), finite surrogate: x between y and z implies
        // subject({x}) inside subject({y}) v subject({z})
        {
            const Point y = rng.point(c), z = rng.point(c);
            const Rat lambda(Int(rng.uniform(1, 7)), Int(8));
            const Point x = lambda * y + (1 - lambda) * z;
            const ConvexBody hullimg = join(subject(ConvexBody::point(y)),
                                            subject(ConvexBody::point(z)));
            const ConvexBody ix = subject(ConvexBody::point(x));
            if (!subset(ix, hullimg))
                record(rep.cond_iii_ok, "condition-iii", ConvexBody::point(x),
                       ConvexBody::segment(y, z), ix, hullimg);
        }
        // Condition (iv): C inside the hull of points x_1..x_n implies the
        // image of C is inside the join of the point images
        if (!bc.is_empty()) {
            std::vector<Point> xs = bc.vertices();
            xs.push_back(rng.point(c));
            ConvexBody envelope = ConvexBody::empty(subject.target_dim);
            bool first = true;
            for (const auto& x : xs) {
                const ConvexBody ix = subject(ConvexBody::point(x));
                envelope = first ? ix : join(envelope, ix);
                first = false;
            }
            if (!subset(ic, envelope))
                record(rep.cond_iv_ok, "condition-iv", bc, ConvexBody::hull(c, xs), ic, envelope);
        }
    }
    return rep;
}

inline VerificationReport verify_homomorphism(const HomomorphismSpec& s, int trials,
                                              std::uint64_t seed) {
    return verify_homomorphism(as_body_map(s), trials, seed);
}

struct DimensionLawReport {
    struct Entry {
        int dim_source = 0;
        int dim_image = 0;
    };
    std::vector<Entry> entries;
    bool lower_bound_ok = true;  // dim C <= dim Phi(C)          (when Phi(0) = 0)
    bool upper_bound_ok = true;  // dim Phi(C) <= dim C + d - c  (for dim C <= c-2)
    bool profile_ok = true;      // exact per-case dimension profile

    bool all_ok() const { return lower_bound_ok && upper_bound_ok && profile_ok; }
};

/// Checks the dimension laws for a canonical non-trivial form on the given
/// bodies: the Radon lower bound, the second-countability upper bound, and
/// the exact case profile (case i preserves dimension, case ii raises all by
/// one, cases iii/iv raise nonempty bodies by one and fix the empty set).
inline DimensionLawReport check_dimension_laws(const HomomorphismSpec& s,
                                               const std::vector<ConvexBody>& bodies) {
    if (s.tag() == HomCase::Trivial)
        throw InputError("check_dimension_laws: spec must be non-trivial");
    DimensionLawReport rep;
    const int c = s.source_dim(), d = s.target_dim();
    const bool empty_to_empty = s.tag() != HomCase::II;
    for (const auto& body : bodies) {
        const int dc = dim(body);
        const int di = dim(apply_body(s, body));
        rep.entries.push_back({dc, di});
        if (empty_to_empty && dc > di) rep.lower_bound_ok = false;
        if (dc <= c - 2 && di > dc + (d - c)) rep.upper_bound_ok = false;
        switch (s.tag()) {
            case HomCase::I:
                if (di != dc) rep.profile_ok = false;
                break;
            case HomCase::II:
                if (di != dc + 1) rep.profile_ok = false;
                break;
            case HomCase::III:
            case HomCase::IV:
                if (dc == -1 ? di != -1 : di != dc + 1) rep.profile_ok = false;
                break;
            default:
                break;
        }
    }
    return rep;
}

/// Seeded canonical spec of the requested case with source dimension c
/// (target c+1; target c for case i when raise is false).
inline HomomorphismSpec random_spec(HomCase tag, int c, Rng& rng, bool raise = true) {
    switch (tag) {
        case HomCase::Trivial:
            return HomomorphismSpec::trivial(c, rng.body(c + 1));
        case HomCase::I:
            return HomomorphismSpec::case_i(rng.injection(c, raise ? c + 1 : c));
        case HomCase::II:
            for (;;) {
                AffineMap phi = rng.injection(c, c + 1);
                Point o = rng.point(c + 1);
                if (phi.image_contains(o)) continue;
                return HomomorphismSpec::case_ii(std::move(phi), std::move(o));
            }
        case HomCase::III:
            for (;;) {
                AffineMap phi = rng.injection(c, c + 1);
                VecQ v = rng.point(c + 1);
                if (is_zero(v) || phi.direction_in_image(v)) continue;
                return HomomorphismSpec::case_iii(std::move(phi), std::move(v));
            }
        case HomCase::IV:
            for (;;) {
                AffineMap phi = rng.injection(c, c + 1);
                Point o = rng.point(c + 1);
                if (phi.image_contains(o)) continue;
                Rat gamma(Int(rng.uniform(1, 7)), Int(8));
                return HomomorphismSpec::case_iv(std::move(phi), std::move(o), std::move(gamma));
            }
    }
    throw Error("random_spec: unknown case");
}

}  // namespace cvxlat

#endif
