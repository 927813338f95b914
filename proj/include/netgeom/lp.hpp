#ifndef NETGEOM_LP_HPP
#define NETGEOM_LP_HPP

#include <Eigen/Dense>

namespace netgeom::lp {

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Result {
    Status status = Status::Infeasible;
    double objective = 0.0;
    Eigen::VectorXd solution;  // valid only when status == Optimal
};

/**
 * Dense two-phase tableau simplex for
 *
 *     maximize  c^T z   subject to  A z <= b,  z >= 0.
 *
 * Rows with a negative right-hand side get an artificial variable and are
 * resolved in phase one. Pivoting follows Bland's rule throughout, so the
 * method terminates on degenerate problems. Intended for the tiny systems
 * (tens of rows and columns) produced by region witness searches.
 */
Result maximize(const Eigen::VectorXd& c, const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                double pivot_tol = 1e-11);

}  // namespace netgeom::lp

#endif
