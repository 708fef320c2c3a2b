#ifndef CVXLAT_GENERATE_HPP
#define CVXLAT_GENERATE_HPP

#include <cstdint>
#include <vector>

#include "cvxlat/affine_map.hpp"
#include "cvxlat/body.hpp"

namespace cvxlat {

/// Deterministic seeded randomness. A single 64-bit seed is split into named
/// streams (one per trial) so serial and parallel runs see identical draws.
class Rng {
  public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    /// Stream `id` of the given master seed.
    static Rng stream(std::uint64_t seed, std::uint64_t id) {
        Rng mixer(seed ^ (0x9e3779b97f4a7c15ULL + id * 0xbf58476d1ce4e5b9ULL));
        mixer.next();
        return mixer;
    }

    std::uint64_t next() {  // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Small rational: numerator in [-8, 8], denominator in {1, 2, 4}.
    Rat small_rational() {
        const std::int64_t num = uniform(-8, 8);
        const std::int64_t den = std::int64_t{1} << uniform(0, 2);
        return Rat(Int(num), Int(den));
    }

    /// Nonnegative small rational, numerator in [0, 8].
    Rat small_nonneg_rational() {
        const std::int64_t num = uniform(0, 8);
        const std::int64_t den = std::int64_t{1} << uniform(0, 2);
        return Rat(Int(num), Int(den));
    }

    Point point(int dim) {
        Point p(dim);
        for (int i = 0; i < dim; ++i) p(i) = small_rational();
        return p;
    }

    /// Random body with 1..6 vertices (before canonicalization), occasionally
    /// the empty set when allow_empty is set.
    ConvexBody body(int dim, bool allow_empty = false) {
        if (allow_empty && uniform(0, 9) == 0) return ConvexBody::empty(dim);
        const int nverts = static_cast<int>(uniform(1, 6));
        std::vector<Point> pts;
        pts.reserve(nverts);
        for (int i = 0; i < nverts; ++i) pts.push_back(point(dim));
        return ConvexBody::hull(dim, std::move(pts));
    }

    /// Random body of a prescribed dimension k in ambient dimension n
    /// (k = -1 gives the empty set). Draws affinely independent vertex sets.
    ConvexBody body_of_dim(int ambient, int k) {
        if (k < 0) return ConvexBody::empty(ambient);
        for (;;) {
            std::vector<Point> pts;
            for (int i = 0; i <= k; ++i) pts.push_back(point(ambient));
            if (affine_rank(pts) == k) return ConvexBody::hull(ambient, std::move(pts));
        }
    }

    /// Random point inside the body: a convex combination of its vertices.
    Point point_in(const ConvexBody& c) {
        const auto& verts = c.vertices();
        VecQ w(verts.size());
        Rat total = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            w(i) = small_nonneg_rational();
            total += w(i);
        }
        if (total == 0) { w(0) = 1; total = 1; }
        Point p = VecQ::Zero(c.ambient_dim());
        for (std::size_t i = 0; i < verts.size(); ++i) p += (w(i) / total) * verts[i];
        return p;
    }

    /// Injective affine map with small rational entries.
    AffineMap injection(int c, int d) {
        for (;;) {
            MatQ m(d, c);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < c; ++j) m(i, j) = small_rational();
            if (rank(m) != c) continue;
            VecQ t(d);
            for (int i = 0; i < d; ++i) t(i) = small_rational();
            return AffineMap(std::move(m), std::move(t));
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace cvxlat

#endif
