#pragma once

#include <vector>

#include <Eigen/Dense>

#include "dyadic/affine.hpp"
#include "dyadic/jsr.hpp"

namespace dyadic {

/// Samples of the dyadic fractal curve of an affine pair at all 2^depth
/// dyadic points of [0,1): point j holds v(j * 2^-depth).
struct CurveSamples {
  unsigned depth = 0;
  std::vector<Eigen::VectorXd> points;
  AffinePair pair;
  /// JSR bracket of the linear parts computed for the contraction check.
  JsrEstimate jsr;

  Eigen::Index dimension() const { return pair.dimension(); }
};

struct CurveOptions {
  unsigned jsr_depth = 12;
  unsigned max_depth = 22;
};

/// v(0.d1..dk) = A_{d1} o ... o A_{dk} (v0) with v0 the fixed point of a0.
/// Refuses when the JSR upper bound of the linear parts is not < 1 (the
/// digit products would not converge).
CurveSamples sample_curve(const AffinePair& pair, unsigned depth,
                          const CurveOptions& options = {});

}  // namespace dyadic
