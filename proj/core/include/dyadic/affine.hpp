#pragma once

#include <Eigen/Dense>

namespace dyadic {

/// x -> linear * x + translation in R^d.
struct AffineOperator {
  Eigen::MatrixXd linear;
  Eigen::VectorXd translation;

  Eigen::Index dimension() const { return translation.size(); }
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
    return linear * x + translation;
  }
};

struct AffinePair {
  AffineOperator a0;
  AffineOperator a1;

  Eigen::Index dimension() const { return a0.dimension(); }
};

/// Solves v = L v + t as (I - L) v = t. Requires the linear part to be a
/// contraction (spectral radius < 1); throws NoContractiveFixedPoint
/// otherwise.
Eigen::VectorXd fixed_point(const AffineOperator& op);

}  // namespace dyadic
