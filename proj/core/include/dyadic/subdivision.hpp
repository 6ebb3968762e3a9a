#pragma once

#include <cstdint>
#include <vector>

#include "dyadic/frame.hpp"
#include "dyadic/mask.hpp"
#include "dyadic/sequence.hpp"

namespace dyadic {

/// One subdivision step: (Sa)(alpha) = sum_beta c_{alpha (-) 2 beta} a_beta.
/// Dyadic mode subtracts indices by XOR, classical mode by ordinary
/// subtraction (out-of-range coefficient indices drop out).
Sequence apply_subdivision(const Mask& mask, const Sequence& a, Mode mode);

struct CascadeOptions {
  unsigned max_depth = 24;
};

/// Frame of S^iterations(delta) at resolution `iterations`.
/// Support bound: N = 2^{n-1} in dyadic mode, L-1 in classical mode.
SequenceFrame cascade(const Mask& mask, unsigned iterations, Mode mode,
                      const CascadeOptions& options = {});

enum class ProbeVerdict { converging, diverging, inconclusive };

const char* to_string(ProbeVerdict verdict);

struct ProbeOptions {
  double convergence_tol = 1e-8;
  double divergence_tol = 1e8;
  /// Fitted ratios within this margin of 1 are inconclusive.
  double ratio_margin = 1e-3;
};

struct ProbeReport {
  /// d_n = max_k |S^{n+1}delta(2k) - S^n delta(k)|, n = 1..max_iter-1.
  std::vector<double> diffs;
  /// Successive quotients d_{n+1}/d_n (0 where undefined).
  std::vector<double> ratios;
  /// Geometric ratio from a least-squares fit of log d_n over the tail.
  double fitted_ratio = 0.0;
  ProbeVerdict verdict = ProbeVerdict::inconclusive;
  bool overflow = false;
};

/// Numerical convergence probe: iterates the scheme on delta and watches the
/// sup-differences between consecutive refinements on their common grid.
ProbeReport convergence_probe(const Mask& mask, unsigned max_iter, Mode mode,
                              const ProbeOptions& options = {});

/// Default probe depth for limit_function / CLI front ends.
inline constexpr unsigned kDefaultProbeIterations = 14;

/// Limit function of the scheme on input `a`: sum_k a_k phi(x (-) k),
/// assembled by shifting the cascade frame of phi. Refuses (throws
/// NonConvergentScheme) when the probe does not certify convergence.
SequenceFrame limit_function(const Mask& mask, const Sequence& a, unsigned iterations,
                             Mode mode, const ProbeOptions& probe_options = {},
                             const CascadeOptions& cascade_options = {});

}  // namespace dyadic
