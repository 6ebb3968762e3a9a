#pragma once

#include <Eigen/Dense>

#include "dyadic/frame.hpp"
#include "dyadic/jsr.hpp"
#include "dyadic/mask.hpp"
#include "dyadic/transition.hpp"

namespace dyadic {

/// Eigenvector of T0 for eigenvalue 1, normalized so the coordinates sum
/// to 1. Throws AmbiguousNormalization unless that eigenspace is
/// one-dimensional with nonzero coordinate sum.
Eigen::VectorXd refinement_fixed_vector(const TransitionPair& pair, double tol = 1e-9);

/// Frame assembled from the matrix products v(0.d1..dk) = T_{d1}...T_{dk} * start:
/// component j of v(t) becomes the sample at t + j. The frame covers [0, N)
/// at the requested resolution.
SequenceFrame transition_product_frame(const TransitionPair& pair, unsigned depth,
                                       const Eigen::VectorXd& start);

struct RefinableOptions {
  unsigned jsr_depth = 12;
  unsigned max_depth = 22;
  double sum_rule_tol = 1e-9;
};

/// Samples of the refinable function phi on [0, N) at resolution `depth`,
/// via v(t) = T_{d1}...T_{ddepth} v(0) with v(0) the fixed vector of T0.
/// Exact at dyadic points (trailing zero digits are absorbed by v(0)).
/// Refuses (ContinuityNotCertified) unless the restricted JSR upper bound
/// is < 1.
SequenceFrame refinable_vector_samples(const Mask& mask, unsigned depth,
                                       const RefinableOptions& options = {});

/// Matrix-product route to the subdivision iterate S^depth(delta): the same
/// products applied to the delta start vector (1, 0, ..., 0). Agrees with
/// cascade() up to floating noise; no continuity certificate is required.
SequenceFrame subdivision_product_frame(const Mask& mask, unsigned depth,
                                        unsigned max_depth = 22);

/// JSR on the smallest T-invariant subspace containing (T1 - T0) v(0),
/// grown as a Krylov-style closure. A heuristic stand-in for the minimal
/// common affine subspace; `dimension` reports the closure size.
struct MinimalSubspaceEstimate {
  unsigned dimension = 0;
  JsrEstimate jsr;
};

MinimalSubspaceEstimate minimal_subspace_jsr(const TransitionPair& pair,
                                             unsigned jsr_depth = 12,
                                             double tol = 1e-10);

}  // namespace dyadic
