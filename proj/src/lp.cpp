#include "netgeom/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace netgeom::lp {

namespace {

// Tableau: rows 0..m-1 are constraints, row m is the objective row holding
// reduced costs (negative entry = improving column). Last column is the rhs.
struct Tableau {
    Eigen::MatrixXd T;
    std::vector<Eigen::Index> basis;

    Eigen::Index rows() const { return T.rows() - 1; }
    Eigen::Index rhs() const { return T.cols() - 1; }

    void pivot(Eigen::Index r, Eigen::Index col) {
        T.row(r) /= T(r, col);
        for (Eigen::Index i = 0; i < T.rows(); ++i) {
            if (i == r) continue;
            const double f = T(i, col);
            if (f != 0.0) T.row(i) -= f * T.row(r);
        }
        T(r, col) = 1.0;
        basis[static_cast<std::size_t>(r)] = col;
    }
};

// Bland's rule simplex over columns [0, ncols). Returns Optimal, Unbounded or
// IterationLimit.
Status iterate(Tableau& tab, Eigen::Index ncols, double tol) {
    const Eigen::Index m = tab.rows();
    const Eigen::Index limit = 50 * (m + ncols) + 100;
    for (Eigen::Index it = 0; it < limit; ++it) {
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < ncols; ++j) {
            if (tab.T(m, j) < -tol) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return Status::Optimal;

        Eigen::Index leave = -1;
        double best = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < m; ++i) {
            const double a = tab.T(i, enter);
            if (a <= tol) continue;
            const double ratio = tab.T(i, tab.rhs()) / a;
            if (ratio < best - tol ||
                (std::abs(ratio - best) <= tol && leave >= 0 &&
                 tab.basis[static_cast<std::size_t>(i)] < tab.basis[static_cast<std::size_t>(leave)])) {
                best = std::min(best, ratio);
                leave = i;
            }
        }
        if (leave < 0) return Status::Unbounded;
        tab.pivot(leave, enter);
    }
    return Status::IterationLimit;
}

}  // namespace

Result maximize(const Eigen::VectorXd& c, const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                double pivot_tol) {
    const Eigen::Index m = A.rows();
    const Eigen::Index nv = A.cols();
    Result result;

    std::vector<Eigen::Index> needs_artificial;
    for (Eigen::Index i = 0; i < m; ++i)
        if (b(i) < 0.0) needs_artificial.push_back(i);
    const auto na = static_cast<Eigen::Index>(needs_artificial.size());

    // Columns: [z (nv) | slacks (m) | artificials (na) | rhs]
    Tableau tab;
    tab.T = Eigen::MatrixXd::Zero(m + 1, nv + m + na + 1);
    tab.basis.assign(static_cast<std::size_t>(m), 0);
    Eigen::Index art = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
        const double sign = b(i) < 0.0 ? -1.0 : 1.0;
        tab.T.row(i).head(nv) = sign * A.row(i);
        tab.T(i, nv + i) = sign;
        tab.T(i, tab.rhs()) = sign * b(i);
        if (b(i) < 0.0) {
            tab.T(i, nv + m + art) = 1.0;
            tab.basis[static_cast<std::size_t>(i)] = nv + m + art;
            ++art;
        } else {
            tab.basis[static_cast<std::size_t>(i)] = nv + i;
        }
    }

    const double scale = std::max(1.0, b.size() > 0 ? b.cwiseAbs().maxCoeff() : 0.0);
    const double feas_tol = 1e-9 * scale;

    if (na > 0) {
        // Phase one: maximize -(sum of artificials).
        for (Eigen::Index j = 0; j < na; ++j) tab.T(m, nv + m + j) = 1.0;
        for (Eigen::Index i = 0; i < m; ++i)
            if (tab.basis[static_cast<std::size_t>(i)] >= nv + m) tab.T.row(m) -= tab.T.row(i);

        const Status s = iterate(tab, nv + m + na, pivot_tol);
        if (s == Status::IterationLimit) {
            result.status = s;
            return result;
        }
        if (tab.T(m, tab.rhs()) < -feas_tol) {
            result.status = Status::Infeasible;
            return result;
        }

        // Drive remaining (zero-valued) artificials out of the basis; rows
        // where that is impossible are redundant and dropped.
        std::vector<Eigen::Index> keep;
        for (Eigen::Index i = 0; i < m; ++i) {
            if (tab.basis[static_cast<std::size_t>(i)] >= nv + m) {
                Eigen::Index col = -1;
                for (Eigen::Index j = 0; j < nv + m; ++j) {
                    if (std::abs(tab.T(i, j)) > pivot_tol) {
                        col = j;
                        break;
                    }
                }
                if (col < 0) continue;
                tab.pivot(i, col);
            }
            keep.push_back(i);
        }

        Tableau reduced;
        const auto mk = static_cast<Eigen::Index>(keep.size());
        reduced.T = Eigen::MatrixXd::Zero(mk + 1, nv + m + 1);
        for (Eigen::Index r = 0; r < mk; ++r) {
            const Eigen::Index i = keep[static_cast<std::size_t>(r)];
            reduced.T.row(r).head(nv + m) = tab.T.row(i).head(nv + m);
            reduced.T(r, nv + m) = tab.T(i, tab.rhs());
            reduced.basis.push_back(tab.basis[static_cast<std::size_t>(i)]);
        }
        tab = std::move(reduced);
    }

    // Phase two.
    const Eigen::Index mrows = tab.rows();
    tab.T.row(mrows).setZero();
    tab.T.row(mrows).head(nv) = -c.transpose();
    for (Eigen::Index i = 0; i < mrows; ++i) {
        const double f = tab.T(mrows, tab.basis[static_cast<std::size_t>(i)]);
        if (f != 0.0) tab.T.row(mrows) -= f * tab.T.row(i);
    }
    const Status s = iterate(tab, nv + m, pivot_tol);
    result.status = s;
    if (s != Status::Optimal) return result;

    result.solution = Eigen::VectorXd::Zero(nv);
    for (Eigen::Index i = 0; i < mrows; ++i) {
        const Eigen::Index col = tab.basis[static_cast<std::size_t>(i)];
        if (col < nv) result.solution(col) = std::max(0.0, tab.T(i, tab.rhs()));
    }
    result.objective = c.dot(result.solution);
    return result;
}

}  // namespace netgeom::lp
