#pragma once

#include <Eigen/Dense>

namespace mkv {

// Smallest eigenvalue of the symmetrized matrix.
double min_symmetric_eigenvalue(const Eigen::MatrixXd& S);

// Partial order on d x q matrices: A preceq B iff B*B^T - A*A^T is positive
// semi-definite, tested as min symmetric eigenvalue >= -tol.
bool matrix_partial_order(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double tol);

// The margin behind the decision: min eigenvalue of B*B^T - A*A^T.
double matrix_order_margin(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

}  // namespace mkv
