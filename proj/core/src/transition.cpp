#include "dyadic/transition.hpp"

#include <cmath>
#include <cstddef>

#include "dyadic/errors.hpp"

namespace dyadic {

TransitionPair transition_matrices(const Mask& mask) {
  const auto N = static_cast<Eigen::Index>(mask.matrix_dimension());
  Eigen::MatrixXd t0(N, N), t1(N, N);
  for (Eigen::Index i = 0; i < N; ++i) {
    for (Eigen::Index j = 0; j < N; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      t0(i, j) = mask.at((2 * static_cast<std::size_t>(i)) ^ ju);
      t1(i, j) = mask.at((2 * static_cast<std::size_t>(i) + 1) ^ ju);
    }
  }
  return {std::move(t0), std::move(t1), mask};
}

Eigen::MatrixXd difference_basis(Eigen::Index n) {
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, n - 1);
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    u(j, j) = 1.0;
    u(j + 1, j) = -1.0;
  }
  return u;
}

namespace {

void check_column_sums(const Eigen::MatrixXd& t, double tol, const char* which) {
  for (Eigen::Index j = 0; j < t.cols(); ++j) {
    if (std::abs(t.col(j).sum() - 1.0) > tol) {
      throw InvarianceViolation(std::string(which) +
                                " column sums deviate from 1; the difference "
                                "subspace is not invariant");
    }
  }
}

/// Restriction in the difference basis. With U's leading (N-1) x (N-1) block
/// lower bidiagonal and unit diagonal, B solves U B = T U exactly by forward
/// substitution on the first N-1 rows. Row 0 is taken verbatim, which keeps
/// 1x1 restrictions free of any rounding beyond the entries themselves.
Eigen::MatrixXd restrict_one(const Eigen::MatrixXd& t, const Eigen::MatrixXd& u) {
  const Eigen::Index m = t.rows() - 1;
  const Eigen::MatrixXd y = t * u;
  Eigen::MatrixXd b(m, m);
  if (m == 0) return b;
  b.row(0) = y.row(0);
  for (Eigen::Index i = 1; i < m; ++i) {
    b.row(i) = y.row(i) + b.row(i - 1);
  }
  return b;
}

}  // namespace

RestrictedPair restrict_to_difference_subspace(const TransitionPair& pair, double tol) {
  check_column_sums(pair.t0, tol, "T0");
  check_column_sums(pair.t1, tol, "T1");
  const Eigen::MatrixXd u = difference_basis(pair.t0.rows());
  return {restrict_one(pair.t0, u), restrict_one(pair.t1, u)};
}

}  // namespace dyadic
