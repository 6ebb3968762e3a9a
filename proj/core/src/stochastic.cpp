#include "dyadic/stochastic.hpp"

#include <cmath>
#include <random>

#include "dyadic/errors.hpp"

namespace dyadic {

namespace {

Eigen::VectorXd random_simplex_point(Eigen::Index dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Eigen::VectorXd x(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    // Exponential spacings give the uniform distribution on the simplex.
    x(i) = -std::log(1.0 - uni(rng));
  }
  return x / x.sum();
}

}  // namespace

ContractionReport l1_contraction_check(const Eigen::MatrixXd& a, int trials,
                                       std::uint64_t seed, double tol) {
  if (a.rows() != a.cols()) throw NotColumnStochastic("matrix must be square");
  if ((a.array() < -tol).any()) {
    throw NotColumnStochastic("matrix has negative entries");
  }
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    if (std::abs(a.col(j).sum() - 1.0) > tol) {
      throw NotColumnStochastic("column sums deviate from 1");
    }
  }

  ContractionReport report;
  double best_min = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const double row_min = a.row(i).minCoeff();
    if (row_min > 0.0 && row_min > best_min) {
      best_min = row_min;
      report.positive_row = static_cast<int>(i);
    }
  }
  if (report.positive_row < 0) return report;

  report.applicable = true;
  report.bound = 1.0 - best_min;
  report.trials = trials;

  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Eigen::VectorXd x = random_simplex_point(a.rows(), rng);
    const Eigen::VectorXd y = random_simplex_point(a.rows(), rng);
    const double den = (x - y).lpNorm<1>();
    if (den < 1e-14) continue;
    const double num = (a * (x - y)).lpNorm<1>();
    report.worst_ratio = std::max(report.worst_ratio, num / den);
    if (num > report.bound * den + 1e-12) ++report.violations;
  }
  return report;
}

}  // namespace dyadic
