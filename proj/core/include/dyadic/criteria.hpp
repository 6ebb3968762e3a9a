#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dyadic/frame.hpp"
#include "dyadic/index_set.hpp"
#include "dyadic/jsr.hpp"
#include "dyadic/mask.hpp"
#include "dyadic/refinable.hpp"
#include "dyadic/subdivision.hpp"

namespace dyadic {

enum class RuleVerdict { converges, diverges, undetermined };

const char* to_string(RuleVerdict verdict);

struct RuleResult {
  std::string name;
  bool applied = false;
  RuleVerdict verdict = RuleVerdict::undetermined;
  std::string detail;
};

/// Parity sum rule: both the even-index and odd-index coefficient sums
/// equal 1 (necessary for convergence).
bool necessary_condition(const Mask& mask, double tol = 1e-9);

/// Strictly positive masks satisfying the sum rule always converge.
RuleResult positive_mask_verdict(const Mask& mask);

struct NonnegativeEvidence {
  /// I_1, I_2, ... as examined (index 0 holds I_1).
  std::vector<std::set<std::uint64_t>> levels;
  /// Fraction of window positions failing coverage, per level.
  std::vector<double> uncovered_fraction;
  /// Level at which coverage first passed (0 when none).
  unsigned passed_level = 0;
};

/// Coverage criterion for nonnegative masks: at level N every window
/// {i (+) l : l < n} must be reachable inside I_N by some aligned shift
/// 2^N j. Converges at the first passing level; reports divergence evidence
/// when the gap structure is stable across the deepest levels.
RuleResult nonnegative_criterion(const Mask& mask, unsigned max_level = 0,
                                 NonnegativeEvidence* evidence = nullptr);

struct GcdAdvisory {
  bool applicable = false;
  std::uint64_t gcd = 0;
  bool conjectured_convergent = false;
  std::string note;
};

/// GCD heuristic (advisory only, never part of a verdict): gcd(I) != 1
/// conjecturally signals divergence.
GcdAdvisory gcd_conjecture_flag(const IndexSet& index_set);

/// Explicit rule for masks of length 4 satisfying the sum rule
/// ({c0, c1, 1-c0, 1-c1}): converges iff |c0 - c1| < 1, diverges iff > 1,
/// undetermined at equality.
RuleResult four_coefficient_criterion(const Mask& mask);

struct StabilityReport {
  double smallest_eigenvalue = 0.0;
  double largest_eigenvalue = 0.0;
  bool stable = false;
  /// Smallest sup-norm of random unit-coefficient shift combinations.
  double min_combination_sup = 0.0;
  int trials = 0;
};

/// Grid-sampled Gram-matrix surrogate for linear independence of the dyadic
/// integer shifts phi(. (+) k), k = 0..M-1. Heuristic: stable when the
/// smallest Gram eigenvalue exceeds 1e-6 times the largest.
StabilityReport stability_probe(const SequenceFrame& frame, int trials = 64,
                                std::uint64_t seed = 2024);

struct AnalyzeOptions {
  double sum_rule_tol = 1e-9;
  unsigned probe_iterations = kDefaultProbeIterations;
  ProbeOptions probe;
  unsigned jsr_depth = 12;
  unsigned nonnegative_max_level = 0;  // 0: pick from the mask length
};

enum class OverallVerdict { converges, diverges, undetermined };

const char* to_string(OverallVerdict verdict);

/// Aggregated convergence report for one mask (dyadic machinery).
struct Verdict {
  bool necessary_ok = false;
  std::vector<RuleResult> rules;
  GcdAdvisory advisory;
  std::optional<JsrEstimate> jsr;            // on the difference subspace
  std::optional<MinimalSubspaceEstimate> jsr_minimal;
  std::optional<HolderInterval> holder;
  std::optional<ProbeReport> probe;
  OverallVerdict overall = OverallVerdict::undetermined;
  std::string deciding_rule;
  std::vector<std::string> warnings;
};

/// Runs the necessary condition, the special-case rules, the spectral
/// machinery and the cascade probe, and composes the overall verdict.
/// A nonnegative-rule verdict that contradicts the probe downgrades the
/// overall result to undetermined with both pieces of evidence kept.
Verdict analyze(const Mask& mask, const AnalyzeOptions& options = {});

}  // namespace dyadic
