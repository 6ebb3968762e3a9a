#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace dyadic {

struct ContractionReport {
  /// False when the matrix has no strictly positive row; no contraction is
  /// claimed then and the trial fields stay zero.
  bool applicable = false;
  int positive_row = -1;
  /// Contraction factor 1 - m, with m the best positive-row minimum.
  double bound = 1.0;
  double worst_ratio = 0.0;
  int trials = 0;
  int violations = 0;
};

/// Empirical check of the l1 contraction of a column-stochastic matrix with
/// a positive row: for random simplex pairs x, y asserts
/// |Ax - Ay|_1 <= (1 - m) |x - y|_1 + 1e-12. Throws NotColumnStochastic when
/// the input is not column-stochastic and nonnegative within tolerance.
ContractionReport l1_contraction_check(const Eigen::MatrixXd& a, int trials,
                                       std::uint64_t seed = 2024,
                                       double tol = 1e-9);

}  // namespace dyadic
