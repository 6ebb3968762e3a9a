#include "dyadic/fractal_curve.hpp"

#include <string>
#include <utility>

#include "dyadic/errors.hpp"

namespace dyadic {

CurveSamples sample_curve(const AffinePair& pair, unsigned depth,
                          const CurveOptions& options) {
  if (pair.a0.dimension() != pair.a1.dimension()) {
    throw Error("affine pair dimensions differ");
  }
  if (depth > options.max_depth) {
    throw ResourceLimit("curve sampling depth exceeds the configured limit");
  }

  const JsrEstimate est =
      jsr_bounds(pair.a0.linear, pair.a1.linear, options.jsr_depth);
  if (est.upper >= 1.0) {
    throw ContinuityNotCertified(
        "joint spectral radius upper bound " + std::to_string(est.upper) +
        " >= 1; the digit products do not contract");
  }

  CurveSamples samples;
  samples.depth = depth;
  samples.pair = pair;
  samples.jsr = est;

  // Same suffix-sharing scheme as the transition products: extend digit
  // strings on the left, storing d1 at the most significant bit.
  samples.points = {fixed_point(pair.a0)};
  for (unsigned s = 0; s < depth; ++s) {
    std::vector<Eigen::VectorXd> next(samples.points.size() * 2);
    const std::size_t high = std::size_t{1} << s;
    for (std::size_t idx = 0; idx < samples.points.size(); ++idx) {
      next[idx] = pair.a0.apply(samples.points[idx]);
      next[high | idx] = pair.a1.apply(samples.points[idx]);
    }
    samples.points = std::move(next);
  }
  return samples;
}

}  // namespace dyadic
