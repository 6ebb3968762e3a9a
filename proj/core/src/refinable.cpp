#include "dyadic/refinable.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "dyadic/errors.hpp"

namespace dyadic {

Eigen::VectorXd refinement_fixed_vector(const TransitionPair& pair, double tol) {
  const Eigen::Index n = pair.t0.rows();
  Eigen::MatrixXd shifted = pair.t0 - Eigen::MatrixXd::Identity(n, n);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(shifted);
  lu.setThreshold(tol);
  if (lu.dimensionOfKernel() != 1) {
    throw AmbiguousNormalization(
        "eigenvalue-1 eigenspace of T0 is not one-dimensional (dimension " +
        std::to_string(lu.dimensionOfKernel()) + ")");
  }
  Eigen::VectorXd v = lu.kernel().col(0);
  const double s = v.sum();
  if (std::abs(s) <= tol * v.cwiseAbs().maxCoeff()) {
    throw AmbiguousNormalization("fixed vector of T0 has zero coordinate sum");
  }
  return v / s;
}

SequenceFrame transition_product_frame(const TransitionPair& pair, unsigned depth,
                                       const Eigen::VectorXd& start) {
  const Eigen::Index n = pair.t0.rows();
  if (start.size() != n) throw Error("start vector dimension mismatch");

  // Level s holds v(0.d1..ds) for all digit strings, indexed with d1 as the
  // most significant bit; prepending a digit sets the next bit.
  std::vector<Eigen::VectorXd> level{start};
  for (unsigned s = 0; s < depth; ++s) {
    std::vector<Eigen::VectorXd> next(level.size() * 2);
    const std::size_t high = std::size_t{1} << s;
    for (std::size_t idx = 0; idx < level.size(); ++idx) {
      next[idx] = pair.t0 * level[idx];
      next[high | idx] = pair.t1 * level[idx];
    }
    level = std::move(next);
  }

  SequenceFrame frame;
  frame.mode = Mode::dyadic;
  frame.resolution = depth;
  frame.support_bound = static_cast<std::uint64_t>(n);
  frame.values.assign(static_cast<std::size_t>(n) << depth, 0.0);
  const std::size_t stride = std::size_t{1} << depth;
  for (std::size_t k = 0; k < level.size(); ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      frame.values[static_cast<std::size_t>(j) * stride + k] = level[k](j);
    }
  }
  return frame;
}

SequenceFrame refinable_vector_samples(const Mask& mask, unsigned depth,
                                       const RefinableOptions& options) {
  if (depth > options.max_depth) {
    throw ResourceLimit("refinable sampling depth exceeds the configured limit");
  }
  if (!mask.satisfies_sum_rule(options.sum_rule_tol)) {
    throw InvarianceViolation("mask violates the parity sum rule");
  }
  const TransitionPair pair = transition_matrices(mask);
  const RestrictedPair restricted =
      restrict_to_difference_subspace(pair, options.sum_rule_tol);
  const JsrEstimate est = jsr_bounds(restricted.b0, restricted.b1, options.jsr_depth);
  if (est.upper >= 1.0) {
    throw ContinuityNotCertified("restricted JSR upper bound " +
                                 std::to_string(est.upper) +
                                 " does not certify a continuous solution");
  }
  return transition_product_frame(pair, depth, refinement_fixed_vector(pair));
}

SequenceFrame subdivision_product_frame(const Mask& mask, unsigned depth,
                                        unsigned max_depth) {
  if (depth > max_depth) {
    throw ResourceLimit("product frame depth exceeds the configured limit");
  }
  const TransitionPair pair = transition_matrices(mask);
  Eigen::VectorXd start = Eigen::VectorXd::Zero(pair.t0.rows());
  start(0) = 1.0;
  return transition_product_frame(pair, depth, start);
}

MinimalSubspaceEstimate minimal_subspace_jsr(const TransitionPair& pair,
                                             unsigned jsr_depth, double tol) {
  const Eigen::Index n = pair.t0.rows();
  const Eigen::VectorXd v0 = refinement_fixed_vector(pair);
  const Eigen::VectorXd seed = (pair.t1 - pair.t0) * v0;

  // Orthonormal closure of span{seed} under T0, T1.
  std::vector<Eigen::VectorXd> basis;
  const double scale = std::max(1.0, seed.norm());
  auto try_insert = [&](Eigen::VectorXd w) {
    for (const auto& q : basis) w -= q.dot(w) * q;
    if (w.norm() > tol * scale) {
      basis.push_back(w.normalized());
      return true;
    }
    return false;
  };

  try_insert(seed);
  for (std::size_t head = 0; head < basis.size(); ++head) {
    if (static_cast<Eigen::Index>(basis.size()) == n) break;
    const Eigen::VectorXd q = basis[head];
    try_insert(pair.t0 * q);
    try_insert(pair.t1 * q);
  }

  MinimalSubspaceEstimate out;
  out.dimension = static_cast<unsigned>(basis.size());
  if (basis.empty()) {
    out.jsr = {0.0, 0.0, jsr_depth, ""};
    return out;
  }
  Eigen::MatrixXd q(n, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) q.col(static_cast<Eigen::Index>(j)) = basis[j];
  out.jsr = jsr_bounds(q.transpose() * pair.t0 * q, q.transpose() * pair.t1 * q,
                       jsr_depth);
  return out;
}

}  // namespace dyadic
