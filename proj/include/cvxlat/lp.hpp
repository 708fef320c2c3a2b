#ifndef CVXLAT_LP_HPP
#define CVXLAT_LP_HPP

#include <optional>
#include <vector>

#include "cvxlat/linalg.hpp"

namespace cvxlat {

/// Exact rational linear programming by two-phase primal simplex with
/// Bland's anti-cycling rule. Problem sizes in this library are tiny
/// (dimensions <= 5, a few dozen constraints), so a dense tableau is fine.

struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    VecQ x;     // structural variables at the optimum
    Rat value;  // objective value at the optimum
};

namespace detail {

class SimplexTableau {
  public:
    // maximize c.x  s.t.  A x <= b,  E x = f,  x >= 0
    SimplexTableau(const MatQ& a, const VecQ& b, const MatQ& e, const VecQ& f)
        : n_struct_(static_cast<int>(a.cols() > 0 ? a.cols() : e.cols())) {
        const int m_le = static_cast<int>(a.rows());
        const int m_eq = static_cast<int>(e.rows());
        const int m = m_le + m_eq;
        n_slack_ = m_le;
        // artificial columns are appended lazily below
        rows_.assign(m, VecQ::Zero(n_struct_ + n_slack_ + 1));
        basis_.assign(m, -1);
        for (int i = 0; i < m_le; ++i) {
            for (int j = 0; j < n_struct_; ++j) rows_[i](j) = a(i, j);
            rows_[i](n_struct_ + i) = 1;
            rows_[i](cols()) = b(i);
        }
        for (int i = 0; i < m_eq; ++i) {
            for (int j = 0; j < n_struct_; ++j) rows_[m_le + i](j) = e(i, j);
            rows_[m_le + i](cols()) = f(i);
        }
        for (int i = 0; i < m; ++i) {
            if (rows_[i](cols()) < 0) rows_[i] = -rows_[i];
        }
        // basis: slack where its coefficient survived as +1, artificial otherwise
        std::vector<int> needs_art;
        for (int i = 0; i < m; ++i) {
            if (i < m_le && rows_[i](n_struct_ + i) == 1)
                basis_[i] = n_struct_ + i;
            else
                needs_art.push_back(i);
        }
        n_art_ = static_cast<int>(needs_art.size());
        if (n_art_ > 0) {
            for (auto& r : rows_) {
                VecQ wider = VecQ::Zero(n_struct_ + n_slack_ + n_art_ + 1);
                wider.head(n_struct_ + n_slack_) = r.head(n_struct_ + n_slack_);
                wider(wider.size() - 1) = r(r.size() - 1);
                r = std::move(wider);
            }
            for (int k = 0; k < n_art_; ++k) {
                rows_[needs_art[k]](n_struct_ + n_slack_ + k) = 1;
                basis_[needs_art[k]] = n_struct_ + n_slack_ + k;
            }
        }
    }

    int cols() const { return static_cast<int>(rows_.empty() ? n_struct_ + n_slack_ + n_art_ : rows_[0].size() - 1); }

    bool has_artificials() const { return n_art_ > 0; }

    /// Runs phase 1; returns false when the constraints are infeasible.
    bool phase1() {
        if (n_art_ == 0) return true;
        VecQ obj = VecQ::Zero(cols());
        for (int k = 0; k < n_art_; ++k) obj(n_struct_ + n_slack_ + k) = -1;
        run(obj, nullptr);
        Rat val = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) val += obj(basis_[i]) * rhs(i);
        if (val != 0) return false;
        drive_out_artificials();
        return true;
    }

    /// Runs phase 2 on the structural objective; true objective value and the
    /// solution are read off afterwards. Returns false when unbounded.
    bool phase2(const VecQ& c_struct) {
        VecQ obj = VecQ::Zero(cols());
        for (int j = 0; j < n_struct_ && j < c_struct.size(); ++j) obj(j) = c_struct(j);
        bool unbounded = false;
        run(obj, &unbounded);
        return !unbounded;
    }

    VecQ solution() const {
        VecQ x = VecQ::Zero(n_struct_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < n_struct_) x(basis_[i]) = rhs(i);
        return x;
    }

  private:
    Rat rhs(std::size_t i) const { return rows_[i](rows_[i].size() - 1); }

    void pivot(int row, int col) {
        VecQ& pr = rows_[row];
        const Rat inv = pr(col);
        pr /= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (static_cast<int>(i) == row) continue;
            const Rat f = rows_[i](col);
            if (f != 0) rows_[i] -= f * pr;
        }
        basis_[row] = col;
    }

    // Bland's rule on the reduced-cost row; terminates without cycling.
    void run(const VecQ& obj, bool* unbounded) {
        const int nc = cols();
        VecQ red(nc);
        auto recompute = [&]() {
            red = obj;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rat cb = obj(basis_[i]);
                if (cb != 0) red -= cb * rows_[i].head(nc);
            }
        };
        recompute();
        for (;;) {
            int enter = -1;
            for (int j = 0; j < nc; ++j) {
                if (red(j) > 0) { enter = j; break; }
            }
            if (enter < 0) return;
            int leave = -1;
            Rat best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rat piv = rows_[i](enter);
                if (piv <= 0) continue;
                const Rat ratio = rhs(i) / piv;
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = static_cast<int>(i);
                    best = ratio;
                }
            }
            if (leave < 0) {
                if (unbounded) *unbounded = true;
                return;
            }
            pivot(leave, enter);
            const Rat f = red(enter);
            if (f != 0) red -= f * rows_[leave].head(nc);
        }
    }

    void drive_out_artificials() {
        const int art_begin = n_struct_ + n_slack_;
        std::vector<std::size_t> drop;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] < art_begin) continue;
            int col = -1;
            for (int j = 0; j < art_begin; ++j) {
                if (rows_[i](j) != 0) { col = j; break; }
            }
            if (col >= 0)
                pivot(static_cast<int>(i), col);  // rhs is 0: feasibility kept
            else
                drop.push_back(i);  // redundant constraint
        }
        for (auto it = drop.rbegin(); it != drop.rend(); ++it) {
            rows_.erase(rows_.begin() + *it);
            basis_.erase(basis_.begin() + *it);
        }
        // truncate artificial columns
        for (auto& r : rows_) {
            VecQ shorter(art_begin + 1);
            shorter.head(art_begin) = r.head(art_begin);
            shorter(art_begin) = r(r.size() - 1);
            r = std::move(shorter);
        }
        n_art_ = 0;
    }

    int n_struct_;
    int n_slack_ = 0;
    int n_art_ = 0;
    std::vector<VecQ> rows_;
    std::vector<int> basis_;
};

}  // namespace detail

/// maximize c.x  s.t.  A x <= b, E x = f, x >= 0
inline LpResult simplex_max_nonneg(const MatQ& a, const VecQ& b, const MatQ& e,
                                   const VecQ& f, const VecQ& c) {
    detail::SimplexTableau t(a, b, e, f);
    LpResult res;
    if (!t.phase1()) {
        res.status = LpResult::Status::Infeasible;
        return res;
    }
    if (!t.phase2(c)) {
        res.status = LpResult::Status::Unbounded;
        return res;
    }
    res.status = LpResult::Status::Optimal;
    res.x = t.solution();
    res.value = 0;
    for (Eigen::Index j = 0; j < c.size() && j < res.x.size(); ++j) res.value += c(j) * res.x(j);
    return res;
}

/// maximize c.x  s.t.  A x <= b, E x = f, x free (split into x = u - w).
inline LpResult simplex_max_free(const MatQ& a, const VecQ& b, const MatQ& e,
                                 const VecQ& f, const VecQ& c) {
    const Eigen::Index n = c.size();
    MatQ a2(a.rows(), 2 * n), e2(e.rows(), 2 * n);
    if (a.rows() > 0) { a2.leftCols(n) = a; a2.rightCols(n) = -a; }
    if (e.rows() > 0) { e2.leftCols(n) = e; e2.rightCols(n) = -e; }
    VecQ c2(2 * n);
    c2.head(n) = c;
    c2.tail(n) = -c;
    LpResult r = simplex_max_nonneg(a2, b, e2, f, c2);
    if (r.status == LpResult::Status::Optimal) {
        VecQ x(n);
        for (Eigen::Index j = 0; j < n; ++j) x(j) = r.x(j) - r.x(n + j);
        r.x = std::move(x);
    }
    return r;
}

inline std::optional<VecQ> feasible_point_nonneg(const MatQ& a, const VecQ& b,
                                                 const MatQ& e, const VecQ& f,
                                                 Eigen::Index nvars) {
    detail::SimplexTableau t(a, b, e, f);
    if (!t.phase1()) return std::nullopt;
    VecQ x = t.solution();
    (void)nvars;
    return x;
}

inline std::optional<VecQ> feasible_point_free(const MatQ& a, const VecQ& b,
                                               const MatQ& e, const VecQ& f,
                                               Eigen::Index nvars) {
    MatQ a2(a.rows(), 2 * nvars), e2(e.rows(), 2 * nvars);
    if (a.rows() > 0) { a2.leftCols(nvars) = a; a2.rightCols(nvars) = -a; }
    if (e.rows() > 0) { e2.leftCols(nvars) = e; e2.rightCols(nvars) = -e; }
    auto r = feasible_point_nonneg(a2, b, e2, f, 2 * nvars);
    if (!r) return std::nullopt;
    VecQ x(nvars);
    for (Eigen::Index j = 0; j < nvars; ++j) x(j) = (*r)(j) - (*r)(nvars + j);
    return x;
}

/// Barycentric weights expressing target as a convex combination of the
/// generators, or nullopt when target lies outside their hull.
inline std::optional<VecQ> convex_weights(const std::vector<VecQ>& gens, const VecQ& target) {
    if (gens.empty()) return std::nullopt;
    const Eigen::Index n = target.size();
    const Eigen::Index k = static_cast<Eigen::Index>(gens.size());
    MatQ e(n + 1, k);
    VecQ f(n + 1);
    for (Eigen::Index j = 0; j < k; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) e(i, j) = gens[j](i);
        e(n, j) = 1;
    }
    f.head(n) = target;
    f(n) = 1;
    return feasible_point_nonneg(MatQ(0, k), VecQ(0), e, f, k);
}

}  // namespace cvxlat

#endif
