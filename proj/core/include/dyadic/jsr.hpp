#pragma once

#include <string>

#include <Eigen/Dense>

namespace dyadic {

/// Bracket for the joint spectral radius of a matrix pair.
struct JsrEstimate {
  double lower = 0.0;
  double upper = 0.0;
  unsigned depth = 0;
  /// Digit string of the product attaining the lower bound ("" when the
  /// lower bound is 0).
  std::string witness;
};

/// Exhaustive product search up to length `max_depth` with branch-and-bound
/// pruning:
///   lower = max over products P of length l <= depth of rho(P)^{1/l},
///   upper = min over lengths l of max over length-l products of |P|_2^{1/l}.
/// Both bounds are running bests, hence monotone in depth. Ties in the
/// witness go to the lexicographically smallest digit string.
JsrEstimate jsr_bounds(const Eigen::MatrixXd& a0, const Eigen::MatrixXd& a1,
                       unsigned max_depth = 12);

struct HolderInterval {
  double lo = 0.0;
  double hi = 0.0;
  /// True when the JSR upper bound is < 1 (continuous refinable function).
  bool continuity_certified = false;
  /// True when the JSR lower bound is 0, so no finite upper exponent.
  bool unbounded = false;
};

/// [-log2(upper), -log2(lower)] of a JSR bracket. When upper >= 1 the lower
/// endpoint is <= 0 and continuity stays uncertified.
HolderInterval holder_exponent(const JsrEstimate& estimate);

/// Largest singular value.
double spectral_norm(const Eigen::MatrixXd& m);

/// Largest eigenvalue modulus, capped by the spectral norm (the cap removes
/// eigensolver noise on nilpotent products).
double spectral_radius(const Eigen::MatrixXd& m);

}  // namespace dyadic
