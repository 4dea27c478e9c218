#include "mkv/matrix_order.hpp"

#include "mkv/errors.hpp"

namespace mkv {

double min_symmetric_eigenvalue(const Eigen::MatrixXd& S) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (S + S.transpose()),
                                                      Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double matrix_order_margin(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw DimensionError("matrix_order: shape mismatch");
    return min_symmetric_eigenvalue(B * B.transpose() - A * A.transpose());
}

bool matrix_partial_order(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double tol) {
    if (tol < 0.0) throw DomainError("matrix_partial_order: tol >= 0 required");
    return matrix_order_margin(A, B) >= -tol;
}

}  // namespace mkv
