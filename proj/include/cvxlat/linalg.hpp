#ifndef CVXLAT_LINALG_HPP
#define CVXLAT_LINALG_HPP

#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "cvxlat/rational.hpp"

namespace cvxlat {

using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

inline Rat dot(const VecQ& a, const VecQ& b) { return a.dot(b); }

inline bool is_zero(const VecQ& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != 0) return false;
    return true;
}

/// Strict lexicographic order on coordinate vectors. Used as the canonical
/// total order for vertex sets.
inline bool lex_less(const VecQ& a, const VecQ& b) {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (a(i) > b(i)) return false;
    }
    return a.size() < b.size();
}

inline bool vec_eq(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return false;
    return true;
}

/// In-place reduced row echelon form; returns the pivot column indices.
inline std::vector<int> rref(MatQ& m) {
    std::vector<int> pivots;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (m(i, c) != 0) { p = i; break; }
        }
        if (p < 0) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const Rat inv = m(r, c);
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) /= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rat f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

inline int rank(MatQ m) { return static_cast<int>(rref(m).size()); }

/// Basis of the kernel of m (one vector per free column of the RREF).
inline std::vector<VecQ> kernel_basis(const MatQ& m) {
    MatQ r = m;
    const std::vector<int> pivots = rref(r);
    const Eigen::Index cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<VecQ> basis;
    for (Eigen::Index f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        VecQ v = VecQ::Zero(cols);
        v(f) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v(pivots[i]) = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Any solution of A x = b, or nullopt when the system is inconsistent.
inline std::optional<VecQ> solve_any(const MatQ& a, const VecQ& b) {
    MatQ aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    const std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == static_cast<int>(a.cols()))
        return std::nullopt;  // pivot in the augmented column
    VecQ x = VecQ::Zero(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = aug(i, a.cols());
    return x;
}

/// The unique solution of A x = b; nullopt when inconsistent or
/// underdetermined.
inline std::optional<VecQ> solve_unique(const MatQ& a, const VecQ& b) {
    auto x = solve_any(a, b);
    if (!x) return std::nullopt;
    if (rank(a) != static_cast<int>(a.cols())) return std::nullopt;
    return x;
}

/// Rank of the difference set {p_i - p_0}; the points' affine rank.
inline int affine_rank(const std::vector<VecQ>& pts) {
    if (pts.size() <= 1) return 0;
    MatQ d(pts.size() - 1, pts[0].size());
    for (std::size_t i = 1; i < pts.size(); ++i) d.row(i - 1) = (pts[i] - pts[0]).transpose();
    return rank(d);
}

}  // namespace cvxlat

#endif
