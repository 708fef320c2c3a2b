// Test-only oracles, deliberately independent of the library's LP and
// clipping code paths: Caratheodory-style membership by subset enumeration,
// intersection vertices by tight-row enumeration, and Fourier-Motzkin
// feasibility in the plane.
#ifndef CVXLAT_TEST_ORACLES_HPP
#define CVXLAT_TEST_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "cvxlat/body.hpp"
#include "cvxlat/transversal.hpp"

namespace cvxlat::oracles {

/// Membership by Caratheodory: p lies in conv(S) iff some affinely
/// independent subset of at most n+1 points carries p with nonnegative
/// barycentric coordinates.
inline bool caratheodory_contains(const std::vector<Point>& pts, const Point& p) {
    const int n = static_cast<int>(p.size());
    const int m = static_cast<int>(pts.size());
    std::vector<int> idx;
    std::function<bool(int)> dfs = [&](int start) -> bool {
        if (!idx.empty()) {
            MatQ sys(n + 1, idx.size());
            for (std::size_t j = 0; j < idx.size(); ++j) {
                sys.col(j).head(n) = pts[idx[j]];
                sys(n, j) = 1;
            }
            VecQ rhs(n + 1);
            rhs.head(n) = p;
            rhs(n) = 1;
            auto lambda = solve_unique(sys, rhs);
            if (lambda) {
                bool ok = true;
                for (Eigen::Index j = 0; j < lambda->size(); ++j)
                    if ((*lambda)(j) < 0) { ok = false; break; }
                if (ok) return true;
            }
        }
        if (static_cast<int>(idx.size()) == n + 1) return false;
        for (int i = start; i < m; ++i) {
            idx.push_back(i);
            if (dfs(i + 1)) return true;
            idx.pop_back();
        }
        return false;
    };
    return dfs(0);
}

/// Exhaustive redundancy elimination through the Caratheodory oracle.
inline std::vector<Point> oracle_min_vertices(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end(), vec_eq), pts.end());
    std::vector<Point> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Point> others;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!caratheodory_contains(others, pts[i])) out.push_back(pts[i]);
    }
    return out;
}

/// Intersection vertices by brute force: every n-subset of the combined
/// constraint rows that pins a unique point contributes a candidate; the
/// feasible candidates are exactly the vertices. Returned sorted, so tests
/// can compare the list against meet(C,D).vertices() directly.
inline std::vector<Point> oracle_meet_vertices(const ConvexBody& c, const ConvexBody& d) {
    if (c.is_empty() || d.is_empty()) return {};
    const int n = c.ambient_dim();
    struct Row {
        VecQ a;
        Rat b;
        bool eq;
    };
    std::vector<Row> rows;
    for (const ConvexBody* body : {&c, &d}) {
        HRep h = h_representation(*body);
        for (const auto& [a, b] : h.eq) rows.push_back({a, b, true});
        for (const auto& hs : h.ineq) rows.push_back({hs.a, hs.b, false});
    }
    std::vector<Point> candidates;
    std::vector<int> idx(n);
    const int m = static_cast<int>(rows.size());
    if (m < n) return {};  // cannot pin a point
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (;;) {
        MatQ sys(n, n);
        VecQ rhs(n);
        for (int i = 0; i < n; ++i) {
            sys.row(i) = rows[idx[i]].a.transpose();
            rhs(i) = rows[idx[i]].b;
        }
        auto x = solve_unique(sys, rhs);
        if (x) {
            bool ok = true;
            for (const auto& r : rows) {
                const Rat s = dot(r.a, *x);
                if (r.eq ? (s != r.b) : (s > r.b)) { ok = false; break; }
            }
            if (ok) candidates.push_back(*x);
        }
        int i = n - 1;
        while (i >= 0 && idx[i] == m - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::sort(candidates.begin(), candidates.end(), lex_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end(), vec_eq), candidates.end());
    return candidates;
}

/// Fourier-Motzkin feasibility for two-variable systems a.x <= b.
inline bool fm_feasible_2d(std::vector<std::pair<VecQ, Rat>> rows) {
    std::vector<std::pair<Rat, Rat>> lower, upper;  // y >= l0 + l1 x / y <= ...
    std::vector<std::pair<Rat, Rat>> xonly;         // a x <= b
    for (auto& [a, b] : rows) {
        if (a(1) == 0) {
            xonly.emplace_back(a(0), b);
        } else if (a(1) > 0) {
            upper.emplace_back(-a(0) / a(1), b / a(1));  // y <= c1 x + c0 as (c1, c0)
        } else {
            lower.emplace_back(-a(0) / a(1), b / a(1));
        }
    }
    for (const auto& [lc, l0] : lower)
        for (const auto& [uc, u0] : upper)
            xonly.emplace_back(lc - uc, u0 - l0);  // l <= u projected to x
    // interval feasibility in one variable
    bool has_lo = false, has_hi = false;
    Rat lo, hi;
    for (const auto& [a, b] : xonly) {
        if (a == 0) {
            if (b < 0) return false;
        } else if (a > 0) {
            const Rat v = b / a;
            if (!has_hi || v < hi) { hi = v; has_hi = true; }
        } else {
            const Rat v = b / a;
            if (!has_lo || v > lo) { lo = v; has_lo = true; }
        }
    }
    return !(has_lo && has_hi && lo > hi);
}

}  // namespace cvxlat::oracles

#endif
