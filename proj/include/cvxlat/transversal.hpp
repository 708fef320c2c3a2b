#ifndef CVXLAT_TRANSVERSAL_HPP
#define CVXLAT_TRANSVERSAL_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "cvxlat/body.hpp"
#include "cvxlat/radon.hpp"

namespace cvxlat {

/// Compact segment {s u : s in [s_lo, s_hi]} on a ray from the apex, stored
/// with the apex translated to the origin. s_lo > 0 keeps the segment off
/// the apex.
struct RaySegment {
    VecQ direction;
    Rat s_lo, s_hi;

    RaySegment(VecQ u, Rat lo, Rat hi)
        : direction(std::move(u)), s_lo(std::move(lo)), s_hi(std::move(hi)) {
        if (is_zero(direction)) throw InputError("RaySegment: zero direction");
        if (!(0 < s_lo && s_lo <= s_hi))
            throw InputError("RaySegment: requires 0 < s_lo <= s_hi");
    }
};

/// Compact segment [(x, a), (x, b)] on a line parallel to the distinguished
/// direction, in quotient coordinates.
struct ParallelSegment {
    VecQ base;  // x_I in the quotient space
    Rat lo, hi;

    ParallelSegment(VecQ x, Rat a, Rat b) : base(std::move(x)), lo(std::move(a)), hi(std::move(b)) {
        if (lo > hi) throw InputError("ParallelSegment: requires a <= b");
    }
};

/// Feasibility certificate: the pole vector a (rays mode, hyperplane
/// {y : <a,y> = 1} in apex-at-origin coordinates) or the affine functional
/// psi (parallel mode), plus the per-segment intersection parameters.
struct HyperplaneCert {
    bool parallel_mode = false;
    VecQ a;          // pole (rays mode) or linear part of psi (parallel mode)
    Rat psi_const;   // affine constant of psi (parallel mode only)
    std::vector<Rat> hits;  // rays: parameters s_I; parallel: values psi(x_I)
};

/// Pole of the hyperplane {y : <normal,y> = rho} with respect to o: the
/// unique vector a with H = {y : <a, y-o> = 1}, equal to n_H / Delta_H.
inline Point pole(const VecQ& normal, const Rat& rho, const Point& o) {
    const Rat gap = rho - dot(normal, o);
    if (gap == 0) throw UndefinedPoleError("pole: hyperplane passes through o");
    return normal / gap;
}

/// Inverse of the pole map: hyperplane (normal, rho) through the pole a.
inline std::pair<VecQ, Rat> hyperplane_from_pole(const VecQ& a, const Point& o) {
    if (is_zero(a)) throw UndefinedPoleError("hyperplane_from_pole: zero pole");
    return {a, dot(a, o) + 1};
}

/// Pole-space band of a ray segment: H_a meets the segment iff
/// <a, u> lies in [1/s_hi, 1/s_lo].
struct Band {
    VecQ u;
    Rat lo, hi;  // bounds on <a, u>
};

inline Band segment_constraint(const RaySegment& seg) {
    return Band{seg.direction, 1 / seg.s_hi, 1 / seg.s_lo};
}

namespace detail {

/// Stacks band constraints lo <= <a,u> <= hi into A a <= b rows.
inline void band_rows(const std::vector<Band>& bands, MatQ& a, VecQ& b) {
    const Eigen::Index dim = bands.empty() ? 0 : bands[0].u.size();
    a = MatQ(2 * bands.size(), dim);
    b = VecQ(2 * bands.size());
    for (std::size_t i = 0; i < bands.size(); ++i) {
        a.row(2 * i) = bands[i].u.transpose();
        b(2 * i) = bands[i].hi;
        a.row(2 * i + 1) = -bands[i].u.transpose();
        b(2 * i + 1) = -bands[i].lo;
    }
}

inline std::optional<VecQ> bands_feasible(const std::vector<Band>& bands, Eigen::Index dim) {
    MatQ a;
    VecQ b;
    band_rows(bands, a, b);
    return feasible_point_free(a, b, MatQ(0, dim), VecQ(0), dim);
}

}  // namespace detail

/// Hyperplane transversal for segments directed toward a common apex, by
/// exact LP feasibility in pole space. Returns the certificate or nullopt
/// when no transversal avoiding the apex exists.
inline std::optional<HyperplaneCert> transversal_rays(const std::vector<RaySegment>& family) {
    if (family.empty())
        throw DegenerateFamilyError("transversal_rays: empty family has no nonzero pole");
    const Eigen::Index dim = family[0].direction.size();
    std::vector<Band> bands;
    for (const auto& seg : family) {
        if (seg.direction.size() != dim)
            throw DimensionMismatchError("transversal_rays: mixed dimensions");
        bands.push_back(segment_constraint(seg));
    }
    auto a = detail::bands_feasible(bands, dim);
    if (!a) return std::nullopt;
    HyperplaneCert cert;
    cert.parallel_mode = false;
    cert.a = *a;
    for (const auto& seg : family) {
        const Rat ip = dot(cert.a, seg.direction);
        // ip >= 1/s_hi > 0, so the hyperplane meets the ray in one point
        cert.hits.push_back(1 / ip);
    }
    return cert;
}

/// Hyperplane transversal for parallel segments: an affine functional psi on
/// the quotient space with psi(x_I) in [a_I, b_I] for every segment.
inline std::optional<HyperplaneCert> transversal_parallel(
    const std::vector<ParallelSegment>& family) {
    if (family.empty()) {
        HyperplaneCert cert;  // any functional works; emit zero
        cert.parallel_mode = true;
        cert.psi_const = 0;
        return cert;
    }
    const Eigen::Index k = family[0].base.size();
    // variables (w, beta): lo <= <w, x> + beta <= hi
    MatQ a(2 * family.size(), k + 1);
    VecQ b(2 * family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].base.size() != k)
            throw DimensionMismatchError("transversal_parallel: mixed dimensions");
        a.row(2 * i).head(k) = family[i].base.transpose();
        a(2 * i, k) = 1;
        b(2 * i) = family[i].hi;
        a.row(2 * i + 1).head(k) = -family[i].base.transpose();
        a(2 * i + 1, k) = -1;
        b(2 * i + 1) = -family[i].lo;
    }
    auto sol = feasible_point_free(a, b, MatQ(0, k + 1), VecQ(0), k + 1);
    if (!sol) return std::nullopt;
    HyperplaneCert cert;
    cert.parallel_mode = true;
    cert.a = sol->head(k);
    cert.psi_const = (*sol)(k);
    for (const auto& seg : family) cert.hits.push_back(dot(cert.a, seg.base) + cert.psi_const);
    return cert;
}

struct HellyReport {
    bool global_feasible = false;
    bool all_subfamilies_feasible = false;  // every (d+1)-subfamily
    bool bounded_witness = false;           // some (d+1)-subfamily has a compact pole region
    bool helly_implication_ok = true;       // (subfamilies + witness) => global
    std::vector<int> infeasible_witness;    // minimal infeasible subfamily, when infeasible
};

namespace detail {

/// Irreducible infeasible subset by the deletion filter; for finitely many
/// convex constraint sets in dimension dim its size is at most dim+1.
template <typename Feasible>
std::vector<int> minimal_infeasible(int n, Feasible&& feasible) {
    std::vector<int> current(n);
    for (int i = 0; i < n; ++i) current[i] = i;
    for (int i = 0; i < n; ++i) {
        std::vector<int> without;
        for (int j : current)
            if (j != i) without.push_back(j);
        if (without.size() < current.size() && !feasible(without)) current = std::move(without);
    }
    return current;
}

template <typename BoundedCheck, typename Feasible>
HellyReport helly_report(int n, int helly_number, Feasible&& feasible,
                         BoundedCheck&& bounded) {
    if (n > 25) throw SizeLimitError("helly_check: families above 25 segments are not enumerated");
    HellyReport rep;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    rep.global_feasible = feasible(all);

    rep.all_subfamilies_feasible = true;
    const int k = std::min(helly_number, n);
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        std::vector<int> sub(idx.begin(), idx.end());
        if (!feasible(sub)) {
            rep.all_subfamilies_feasible = false;
            break;
        }
        if (!rep.bounded_witness && bounded(sub)) rep.bounded_witness = true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }

    if (rep.all_subfamilies_feasible && rep.bounded_witness && !rep.global_feasible)
        rep.helly_implication_ok = false;
    if (!rep.global_feasible) rep.infeasible_witness = minimal_infeasible(n, feasible);
    return rep;
}

inline bool region_bounded(const MatQ& a, const VecQ& b, Eigen::Index dim) {
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (int sgn : {1, -1}) {
            VecQ c = VecQ::Zero(dim);
            c(j) = sgn;
            auto r = simplex_max_free(a, b, MatQ(0, dim), VecQ(0), c);
            if (r.status == LpResult::Status::Unbounded) return false;
            if (r.status == LpResult::Status::Infeasible) return true;  // empty is bounded
        }
    }
    return true;
}

}  // namespace detail

/// Empirical Helly-structure check: global feasibility, feasibility of every
/// (d+1)-subfamily, a compactness witness, and the finite-scale Helly
/// implication. Infeasible instances carry a minimal infeasible subfamily.
inline HellyReport helly_check(const std::vector<RaySegment>& family) {
    const int n = static_cast<int>(family.size());
    if (n == 0) throw DegenerateFamilyError("helly_check: empty family");
    const Eigen::Index dim = family[0].direction.size();
    std::vector<Band> bands;
    for (const auto& seg : family) bands.push_back(segment_constraint(seg));
    auto feasible = [&](const std::vector<int>& sub) {
        std::vector<Band> chosen;
        for (int i : sub) chosen.push_back(bands[i]);
        return detail::bands_feasible(chosen, dim).has_value();
    };
    auto bounded = [&](const std::vector<int>& sub) {
        std::vector<Band> chosen;
        for (int i : sub) chosen.push_back(bands[i]);
        MatQ a;
        VecQ b;
        detail::band_rows(chosen, a, b);
        return detail::region_bounded(a, b, dim);
    };
    return detail::helly_report(n, static_cast<int>(dim) + 1, feasible, bounded);
}

inline HellyReport helly_check(const std::vector<ParallelSegment>& family) {
    const int n = static_cast<int>(family.size());
    if (n == 0) throw DegenerateFamilyError("helly_check: empty family");
    const Eigen::Index k = family[0].base.size();
    auto rows_for = [&](const std::vector<int>& sub, MatQ& a, VecQ& b) {
        a = MatQ(2 * sub.size(), k + 1);
        b = VecQ(2 * sub.size());
        for (std::size_t r = 0; r < sub.size(); ++r) {
            const auto& seg = family[sub[r]];
            a.row(2 * r).head(k) = seg.base.transpose();
            a(2 * r, k) = 1;
            b(2 * r) = seg.hi;
            a.row(2 * r + 1).head(k) = -seg.base.transpose();
            a(2 * r + 1, k) = -1;
            b(2 * r + 1) = -seg.lo;
        }
    };
    auto feasible = [&](const std::vector<int>& sub) {
        MatQ a;
        VecQ b;
        rows_for(sub, a, b);
        return feasible_point_free(a, b, MatQ(0, k + 1), VecQ(0), k + 1).has_value();
    };
    auto bounded = [&](const std::vector<int>& sub) {
        MatQ a;
        VecQ b;
        rows_for(sub, a, b);
        return detail::region_bounded(a, b, k + 1);
    };
    // hyperplanes in the ambient space E^{k+1} have k+1 parameters
    return detail::helly_report(n, static_cast<int>(k) + 2, feasible, bounded);
}

/// Whether a body meets an affine subspace, by exact LP.
inline bool body_meets_subspace(const ConvexBody& body, const AffineSubspace& sub) {
    if (body.is_empty() || sub.empty) return false;
    const Eigen::Index n = body.ambient_dim();
    const Eigen::Index nv = static_cast<Eigen::Index>(body.vertices().size());
    const Eigen::Index nd = static_cast<Eigen::Index>(sub.directions.size());
    // sum lambda_i v_i - sum t_j dir_j = base, sum lambda = 1, lambda >= 0, t free
    MatQ e(n + 1, nv + 2 * nd);
    VecQ f(n + 1);
    for (Eigen::Index j = 0; j < nv; ++j) {
        e.col(j).head(n) = body.vertices()[j];
        e(n, j) = 1;
    }
    for (Eigen::Index j = 0; j < nd; ++j) {
        e.col(nv + 2 * j).head(n) = -sub.directions[j];
        e.col(nv + 2 * j + 1).head(n) = sub.directions[j];
        e(n, nv + 2 * j) = 0;
        e(n, nv + 2 * j + 1) = 0;
    }
    f.head(n) = sub.base;
    f(n) = 1;
    return feasible_point_nonneg(MatQ(0, nv + 2 * nd), VecQ(0), e, f, nv + 2 * nd).has_value();
}

/// Constructive affine-dependence subspace: for c+2 source points and their
/// nonempty images, a c-dimensional subspace meeting every image. Follows
/// the Radon-split construction: pick a shared point of the two hull images,
/// express it over each side, and span the witnesses.
inline AffineSubspace affine_dependence_hyperplane(const std::vector<Point>& sources,
                                                   const std::vector<ConvexBody>& images) {
    if (sources.size() != images.size() || sources.empty())
        throw InputError("affine_dependence_hyperplane: sources and images must pair up");
    const int c = static_cast<int>(sources[0].size());
    const int d = images[0].ambient_dim();
    if (static_cast<int>(sources.size()) != c + 2)
        throw InputError("affine_dependence_hyperplane: need exactly c+2 bodies");
    if (d < c) throw DimensionMismatchError("affine_dependence_hyperplane: requires d >= c");
    for (const auto& img : images)
        if (img.is_empty()) throw InputError("affine_dependence_hyperplane: empty image");

    RadonPartition part = radon_partition(c, sources);
    auto side_indices = [&](const std::vector<Point>& side) {
        std::vector<int> out;
        for (const auto& p : side)
            for (std::size_t i = 0; i < sources.size(); ++i)
                if (vec_eq(sources[i], p)) {
                    if (std::find(out.begin(), out.end(), static_cast<int>(i)) == out.end()) {
                        out.push_back(static_cast<int>(i));
                        break;
                    }
                }
        return out;
    };
    const std::vector<int> red = side_indices(part.red);
    const std::vector<int> blue = side_indices(part.blue);

    auto join_side = [&](const std::vector<int>& side) {
        ConvexBody acc = ConvexBody::empty(d);
        for (int i : side) acc = join(acc, images[i]);
        return acc;
    };
    const ConvexBody shared = meet(join_side(red), join_side(blue));
    if (shared.is_empty())
        throw NotFoundError("affine_dependence_hyperplane: hull images of the Radon sides are "
                            "disjoint (inputs violate the preconditions)");
    const Point y0 = shared.vertices().front();

    // express y0 over one side: group the convex weights per image
    auto side_witnesses = [&](const std::vector<int>& side) {
        std::vector<VecQ> gens;
        std::vector<int> owner;
        for (int i : side)
            for (const auto& v : images[i].vertices()) {
                gens.push_back(v);
                owner.push_back(i);
            }
        auto w = convex_weights(gens, y0);
        if (!w)
            throw NotFoundError("affine_dependence_hyperplane: shared point escaped a side hull");
        std::vector<Point> witnesses;
        for (int i : side) {
            Rat mass = 0;
            Point acc = VecQ::Zero(d);
            for (std::size_t g = 0; g < gens.size(); ++g) {
                if (owner[g] != i) continue;
                mass += (*w)(g);
                acc += (*w)(g)*gens[g];
            }
            witnesses.push_back(mass > 0 ? Point(acc / mass) : images[i].vertices().front());
        }
        return witnesses;
    };
    std::vector<Point> span_pts = side_witnesses(red);
    for (auto& p : side_witnesses(blue)) span_pts.push_back(std::move(p));
    span_pts.push_back(y0);

    detail::Chart ch = detail::make_chart(span_pts);
    std::vector<VecQ> dirs;
    for (Eigen::Index j = 0; j < ch.basis.cols(); ++j) dirs.push_back(ch.basis.col(j));
    // extend to exactly c dimensions with coordinate directions
    for (int e = 0; e < d && static_cast<int>(dirs.size()) < c; ++e) {
        VecQ cand = VecQ::Zero(d);
        cand(e) = 1;
        MatQ m(dirs.size() + 1, d);
        for (std::size_t j = 0; j < dirs.size(); ++j) m.row(j) = dirs[j].transpose();
        m.row(dirs.size()) = cand.transpose();
        if (rank(m) == static_cast<int>(dirs.size()) + 1) dirs.push_back(std::move(cand));
    }
    AffineSubspace h = AffineSubspace::through(span_pts.front(), std::move(dirs));
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!body_meets_subspace(images[i], h))
            throw NotFoundError("affine_dependence_hyperplane: constructed subspace misses image " +
                                std::to_string(i));
    }
    return h;
}

}  // namespace cvxlat

#endif
