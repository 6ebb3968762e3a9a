#include "dyadic/subdivision.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "dyadic/errors.hpp"

namespace dyadic {

namespace {

std::uint64_t support_bound_for(const Mask& mask, Mode mode) {
  return mode == Mode::dyadic ? mask.matrix_dimension() : mask.length() - 1;
}

/// Dense subdivision step on the frame window [0, M * 2^{r+1}).
std::vector<double> dense_step(const Mask& mask, const std::vector<double>& in,
                               Mode mode) {
  const std::size_t L = mask.length();
  std::vector<double> out(in.size() * 2, 0.0);
  for (std::size_t beta = 0; beta < in.size(); ++beta) {
    const double v = in[beta];
    if (v == 0.0) continue;
    const std::uint64_t base = std::uint64_t{2} * beta;
    for (std::size_t idx = 0; idx < L; ++idx) {
      const double c = mask.at(idx);
      if (c == 0.0) continue;
      const std::uint64_t alpha = mode == Mode::dyadic ? (base ^ idx) : (base + idx);
      if (alpha < out.size()) out[alpha] += c * v;
    }
  }
  return out;
}

double window_ratio_fit(const std::vector<double>& diffs, unsigned max_iter) {
  if (diffs.empty()) return 0.0;
  const std::size_t window = std::max<std::size_t>(3, max_iter / 2);
  const std::size_t begin = diffs.size() > window ? diffs.size() - window : 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t count = 0;
  for (std::size_t i = begin; i < diffs.size(); ++i) {
    if (diffs[i] <= 0.0) continue;
    const double x = static_cast<double>(i);
    const double y = std::log(diffs[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count == 0) return 0.0;
  if (count == 1) return 1.0;
  const double denom = static_cast<double>(count) * sxx - sx * sx;
  if (denom == 0.0) return 1.0;
  const double slope = (static_cast<double>(count) * sxy - sx * sy) / denom;
  return std::exp(slope);
}

}  // namespace

Sequence apply_subdivision(const Mask& mask, const Sequence& a, Mode mode) {
  if (a.mode() != mode) {
    throw Error("sequence mode does not match the requested subdivision mode");
  }
  Sequence out(mode);
  const std::size_t L = mask.length();
  for (const auto& [beta, v] : a.entries()) {
    if (v == 0.0) continue;
    for (std::size_t idx = 0; idx < L; ++idx) {
      const double c = mask.at(idx);
      if (c == 0.0) continue;
      std::int64_t alpha;
      if (mode == Mode::dyadic) {
        if (beta > (std::int64_t{1} << 62)) throw ArithmeticOverflow("sequence index too large");
        alpha = static_cast<std::int64_t>(
            (static_cast<std::uint64_t>(beta) << 1) ^ static_cast<std::uint64_t>(idx));
      } else {
        alpha = 2 * beta + static_cast<std::int64_t>(idx);
      }
      out.add(alpha, c * v);
    }
  }
  return out;
}

SequenceFrame cascade(const Mask& mask, unsigned iterations, Mode mode,
                      const CascadeOptions& options) {
  if (iterations > options.max_depth) {
    throw ResourceLimit("cascade depth exceeds the configured limit");
  }
  const std::uint64_t M = support_bound_for(mask, mode);
  std::vector<double> cur(M, 0.0);
  cur[0] = 1.0;
  for (unsigned r = 0; r < iterations; ++r) {
    cur = dense_step(mask, cur, mode);
  }
  SequenceFrame frame;
  frame.mode = mode;
  frame.resolution = iterations;
  frame.support_bound = M;
  frame.values = std::move(cur);
  return frame;
}

const char* to_string(ProbeVerdict verdict) {
  switch (verdict) {
    case ProbeVerdict::converging: return "converging";
    case ProbeVerdict::diverging: return "diverging";
    default: return "inconclusive";
  }
}

ProbeReport convergence_probe(const Mask& mask, unsigned max_iter, Mode mode,
                              const ProbeOptions& options) {
  if (max_iter < 2) throw Error("probe needs max_iter >= 2");

  ProbeReport report;
  const std::uint64_t M = support_bound_for(mask, mode);
  std::vector<double> prev(M, 0.0);
  prev[0] = 1.0;
  prev = dense_step(mask, prev, mode);  // S^1 delta

  bool stopped = false;
  for (unsigned n = 1; n < max_iter && !stopped; ++n) {
    std::vector<double> next = dense_step(mask, prev, mode);
    double d = 0.0;
    for (std::size_t k = 0; k < prev.size(); ++k) {
      d = std::max(d, std::abs(next[2 * k] - prev[k]));
    }
    report.diffs.push_back(d);
    if (!std::isfinite(d) || d > options.divergence_tol) {
      report.overflow = true;
      stopped = true;
    } else if (d <= options.convergence_tol) {
      stopped = true;  // converged within tolerance, no need to refine further
    }
    prev = std::move(next);
  }

  for (std::size_t i = 0; i + 1 < report.diffs.size(); ++i) {
    report.ratios.push_back(report.diffs[i] > 0.0 ? report.diffs[i + 1] / report.diffs[i]
                                                  : 0.0);
  }
  report.fitted_ratio = window_ratio_fit(report.diffs, max_iter);

  if (report.overflow) {
    report.verdict = ProbeVerdict::diverging;
  } else if (!report.diffs.empty() && report.diffs.back() <= options.convergence_tol) {
    report.verdict = ProbeVerdict::converging;
  } else if (report.fitted_ratio < 1.0 - options.ratio_margin) {
    report.verdict = ProbeVerdict::converging;
  } else if (report.fitted_ratio > 1.0 + options.ratio_margin) {
    report.verdict = ProbeVerdict::diverging;
  } else {
    report.verdict = ProbeVerdict::inconclusive;
  }
  return report;
}

SequenceFrame limit_function(const Mask& mask, const Sequence& a, unsigned iterations,
                             Mode mode, const ProbeOptions& probe_options,
                             const CascadeOptions& cascade_options) {
  const ProbeReport probe = convergence_probe(mask, kDefaultProbeIterations, mode,
                                              probe_options);
  if (probe.verdict != ProbeVerdict::converging) {
    throw NonConvergentScheme(std::string("cascade probe verdict is ") +
                              to_string(probe.verdict));
  }

  const SequenceFrame phi = cascade(mask, iterations, mode, cascade_options);
  const std::uint64_t M = phi.support_bound;

  std::uint64_t out_bound = 1;
  for (const auto& [k, ak] : a.entries()) {
    if (ak == 0.0) continue;
    if (k < 0) throw Error("limit_function input must be supported on the half-line");
    const std::uint64_t ku = static_cast<std::uint64_t>(k);
    // Dyadic shift by k moves phi's support into the aligned M-block of k.
    const std::uint64_t bound = mode == Mode::dyadic ? (ku / M + 1) * M : ku + M;
    out_bound = std::max(out_bound, bound);
  }

  SequenceFrame out;
  out.mode = mode;
  out.resolution = iterations;
  out.support_bound = out_bound;
  out.values.assign(out_bound << iterations, 0.0);
  for (const auto& [k, ak] : a.entries()) {
    if (ak == 0.0) continue;
    const std::uint64_t shift = static_cast<std::uint64_t>(k) << iterations;
    for (std::uint64_t g = 0; g < phi.values.size(); ++g) {
      const std::uint64_t target = mode == Mode::dyadic ? (g ^ shift) : (g + shift);
      out.values[target] += ak * phi.values[g];
    }
  }
  return out;
}

}  // namespace dyadic
