#pragma once

#include <Eigen/Dense>
#include <optional>

namespace mkv::lp {

// Dense transportation problem: min sum c_ij f_ij over f >= 0 with row sums
// equal to supply and column sums equal to demand (masses must balance).
// Classical transportation simplex with tree-structured bases; deterministic
// pivoting (most negative reduced cost, lexicographic ties, Bland fallback
// after a degenerate stall).
struct TransportResult {
    double cost = 0.0;
    Eigen::MatrixXd flow;
};
TransportResult transport_simplex(const Eigen::VectorXd& supply, const Eigen::VectorXd& demand,
                                  const Eigen::MatrixXd& cost);

// Feasibility of {A x = b, x >= 0} via a phase-1 dense simplex with Bland's
// rule. Infeasible outcomes carry a Farkas certificate y with y^T A <= 0
// componentwise and y^T b > 0.
struct FeasibilityResult {
    bool feasible = false;
    Eigen::VectorXd x;            // a basic feasible point when feasible
    Eigen::VectorXd certificate;  // Farkas multipliers when infeasible
    double phase1_objective = 0.0;
};
FeasibilityResult feasibility_simplex(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);

}  // namespace mkv::lp
