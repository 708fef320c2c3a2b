#ifndef CVXLAT_RADON_HPP
#define CVXLAT_RADON_HPP

#include <functional>
#include <vector>

#include "cvxlat/body.hpp"

namespace cvxlat {

/// Radon partition of a point set: two disjoint parts whose hulls share the
/// witness point.
struct RadonPartition {
    std::vector<Point> red;
    std::vector<Point> blue;
    Point witness;
};

namespace detail {

/// Enumerates index subsets of {0..m-1} of size in [2, max_size] in
/// lexicographic order of their sorted index sequences and returns the first
/// subset carrying an affine dependence with full support, together with its
/// dependence coefficients.
inline bool first_circuit(const std::vector<Point>& pts, int max_size,
                          std::vector<int>& support, VecQ& coeffs) {
    const int m = static_cast<int>(pts.size());
    const Eigen::Index n = pts[0].size();
    // depth-first search emits subsets in lexicographic prefix order
    std::vector<int> cur;
    std::function<bool(int)> dfs = [&](int start) -> bool {
        for (int i = start; i < m; ++i) {
            cur.push_back(i);
            if (cur.size() >= 2) {
                MatQ sys(n + 1, cur.size());
                for (std::size_t j = 0; j < cur.size(); ++j) {
                    sys.col(j).head(n) = pts[cur[j]];
                    sys(n, j) = 1;
                }
                auto kern = kernel_basis(sys);
                if (!kern.empty()) {
                    // full support required: otherwise a smaller subset is
                    // dependent and will be (or was) visited on its own
                    const VecQ& lambda = kern.front();
                    bool full = true;
                    for (Eigen::Index j = 0; j < lambda.size(); ++j)
                        if (lambda(j) == 0) { full = false; break; }
                    if (full) {
                        support = cur;
                        coeffs = lambda;
                        return true;
                    }
                    cur.pop_back();
                    continue;  // supersets of a dependent set are never circuits
                }
            }
            if (static_cast<int>(cur.size()) < max_size && dfs(i + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    return dfs(0);
}

}  // namespace detail

/// Radon partition of at least n+2 points in dimension n. The partition is
/// derived from the affine-dependence kernel vector with lexicographically
/// smallest support; red is the smaller side (ties broken toward the side
/// holding the lowest index) and points outside the support are appended to
/// blue.
inline RadonPartition radon_partition(int ambient_dim, const std::vector<Point>& pts) {
    if (static_cast<int>(pts.size()) < ambient_dim + 2)
        throw InsufficientPointsError("radon_partition: need at least n+2 points");
    for (const auto& p : pts)
        if (static_cast<int>(p.size()) != ambient_dim)
            throw DimensionMismatchError("radon_partition: point of wrong dimension");

    std::vector<int> support;
    VecQ lambda;
    if (!detail::first_circuit(pts, ambient_dim + 2, support, lambda))
        throw Error("radon_partition: no affine dependence found");  // unreachable for >= n+2 points

    // sign convention: first coefficient positive
    if (lambda(0) < 0) lambda = -lambda;
    std::vector<int> pos, neg;
    for (std::size_t j = 0; j < support.size(); ++j)
        (lambda(j) > 0 ? pos : neg).push_back(static_cast<int>(j));

    // witness = normalized positive-side combination (equals the negative side)
    Rat total = 0;
    for (int j : pos) total += lambda(j);
    Point witness = VecQ::Zero(ambient_dim);
    for (int j : pos) witness += (lambda(j) / total) * pts[support[j]];

    const bool pos_is_red =
        pos.size() < neg.size() || (pos.size() == neg.size() && pos.front() < neg.front());
    RadonPartition out;
    out.witness = std::move(witness);
    std::vector<bool> in_support(pts.size(), false);
    for (std::size_t j = 0; j < support.size(); ++j) {
        in_support[support[j]] = true;
        const bool to_red = (lambda(j) > 0) == pos_is_red;
        (to_red ? out.red : out.blue).push_back(pts[support[j]]);
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (!in_support[i]) out.blue.push_back(pts[i]);
    return out;
}

}  // namespace cvxlat

#endif
