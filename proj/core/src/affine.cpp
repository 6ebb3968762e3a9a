#include "dyadic/affine.hpp"

#include <string>

#include "dyadic/errors.hpp"

namespace dyadic {

Eigen::VectorXd fixed_point(const AffineOperator& op) {
  if (op.linear.rows() != op.linear.cols() ||
      op.linear.rows() != op.translation.size()) {
    throw Error("affine operator dimensions are inconsistent");
  }
  const double rho = op.linear.size() == 0
                         ? 0.0
                         : op.linear.eigenvalues().cwiseAbs().maxCoeff();
  if (rho >= 1.0) {
    throw NoContractiveFixedPoint("linear part has spectral radius " +
                                  std::to_string(rho) + " >= 1");
  }
  const Eigen::MatrixXd shifted =
      Eigen::MatrixXd::Identity(op.linear.rows(), op.linear.cols()) - op.linear;
  return shifted.partialPivLu().solve(op.translation);
}

}  // namespace dyadic
