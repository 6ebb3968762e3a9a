#include "dyadic/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "dyadic/errors.hpp"
#include "dyadic/transition.hpp"

namespace dyadic {

const char* to_string(RuleVerdict verdict) {
  switch (verdict) {
    case RuleVerdict::converges: return "converges";
    case RuleVerdict::diverges: return "diverges";
    default: return "undetermined";
  }
}

const char* to_string(OverallVerdict verdict) {
  switch (verdict) {
    case OverallVerdict::converges: return "converges";
    case OverallVerdict::diverges: return "diverges";
    default: return "undetermined";
  }
}

bool necessary_condition(const Mask& mask, double tol) {
  return mask.satisfies_sum_rule(tol);
}

RuleResult positive_mask_verdict(const Mask& mask) {
  RuleResult result{.name = "positive_mask"};
  if (!mask.all_positive() || !necessary_condition(mask)) {
    result.detail = "needs a strictly positive mask satisfying the sum rule";
    return result;
  }
  result.applied = true;
  result.verdict = RuleVerdict::converges;
  result.detail = "strictly positive mask with unit parity sums";
  return result;
}

namespace {

/// Window coverage at one level: every i in the reachable range must admit a
/// single aligned shift j making the whole offset window {i (+) l : l < n}
/// land inside I_N.
double coverage_uncovered_fraction(const std::set<std::uint64_t>& level_set,
                                   unsigned level, unsigned n) {
  const std::uint64_t range = std::uint64_t{1} << (level + n - 1);
  const std::uint64_t j_count = std::uint64_t{1} << (n - 1);
  std::uint64_t misses = 0;
  for (std::uint64_t i = 0; i < range; ++i) {
    bool covered = false;
    for (std::uint64_t j = 0; j < j_count && !covered; ++j) {
      bool all = true;
      for (std::uint64_t l = 0; l < n && all; ++l) {
        all = level_set.contains(i ^ l ^ (j << level));
      }
      covered = all;
    }
    if (!covered) ++misses;
  }
  return static_cast<double>(misses) / static_cast<double>(range);
}

}  // namespace

RuleResult nonnegative_criterion(const Mask& mask, unsigned max_level,
                                 NonnegativeEvidence* evidence) {
  RuleResult result{.name = "nonnegative"};
  if (!mask.all_nonnegative() || !necessary_condition(mask)) {
    result.detail = "needs a nonnegative mask satisfying the sum rule";
    return result;
  }
  result.applied = true;

  const unsigned n = mask.exponent();
  if (max_level == 0) {
    max_level = std::min<unsigned>(mask.matrix_dimension(), 8);
  }
  const IndexSet index_set = IndexSet::positive_indices(mask);

  NonnegativeEvidence local;
  NonnegativeEvidence& ev = evidence ? *evidence : local;
  for (unsigned level = 1; level <= max_level; ++level) {
    ev.levels.push_back(index_set.level(level));
    const double uncovered = coverage_uncovered_fraction(ev.levels.back(), level, n);
    ev.uncovered_fraction.push_back(uncovered);
    if (uncovered == 0.0) {
      ev.passed_level = level;
      result.verdict = RuleVerdict::converges;
      result.detail = "coverage holds at level " + std::to_string(level);
      return result;
    }
  }

  // Divergence evidence: the gap structure did not shrink over the deepest
  // three expansion levels.
  const auto& frac = ev.uncovered_fraction;
  if (frac.size() >= 3) {
    const std::size_t last = frac.size() - 1;
    if (frac[last] >= frac[last - 1] - 1e-9 && frac[last - 1] >= frac[last - 2] - 1e-9) {
      result.verdict = RuleVerdict::diverges;
      result.detail = "coverage gaps stable through level " +
                      std::to_string(frac.size()) + " (uncovered fraction " +
                      std::to_string(frac[last]) + ")";
      return result;
    }
  }
  result.verdict = RuleVerdict::undetermined;
  result.detail = "coverage keeps improving but did not close by level " +
                  std::to_string(max_level);
  return result;
}

GcdAdvisory gcd_conjecture_flag(const IndexSet& index_set) {
  GcdAdvisory advisory;
  advisory.applicable = true;
  advisory.gcd = index_set.gcd();
  advisory.conjectured_convergent = advisory.gcd == 1;
  advisory.note = advisory.gcd == 1
                      ? "gcd(I) = 1: conjectured convergent (advisory only)"
                      : "gcd(I) = " + std::to_string(advisory.gcd) +
                            ": conjectured divergent (advisory only)";

  // The classical caveat (a single odd element at the end, or a single even
  // element at the front) does not force divergence on the half-line.
  std::vector<std::uint64_t> odd, even;
  for (std::uint64_t i : index_set.indices) {
    (i % 2 == 0 ? even : odd).push_back(i);
  }
  if (!index_set.indices.empty()) {
    const bool single_last_odd =
        odd.size() == 1 && odd.front() == index_set.indices.back();
    const bool single_first_even =
        even.size() == 1 && even.front() == index_set.indices.front();
    if (single_last_odd || single_first_even) {
      advisory.note +=
          "; endpoint-parity caveat: the classical analogue stalls at an "
          "endpoint, but dyadic schemes of this shape can still converge";
    }
  }
  return advisory;
}

RuleResult four_coefficient_criterion(const Mask& mask) {
  RuleResult result{.name = "four_coefficient"};
  if (mask.length() != 4 || !necessary_condition(mask)) {
    result.detail = "needs a 4-coefficient mask satisfying the sum rule";
    return result;
  }
  result.applied = true;
  const double gap = std::abs(mask.at(0) - mask.at(1));
  result.detail = "|c0 - c1| = " + std::to_string(gap);
  if (gap < 1.0) {
    result.verdict = RuleVerdict::converges;
  } else if (gap > 1.0) {
    result.verdict = RuleVerdict::diverges;
  } else {
    result.verdict = RuleVerdict::undetermined;  // the criterion is strict
  }
  return result;
}

StabilityReport stability_probe(const SequenceFrame& frame, int trials,
                                std::uint64_t seed) {
  const std::uint64_t shifts = frame.support_bound;
  const std::uint64_t size = frame.values.size();
  const unsigned r = frame.resolution;
  const double weight = std::ldexp(1.0, -static_cast<int>(r));

  // Dyadic shifts of non-power-of-two supports can leave the frame window;
  // out-of-range samples are zero by construction.
  Eigen::MatrixXd gram(static_cast<Eigen::Index>(shifts),
                       static_cast<Eigen::Index>(shifts));
  for (std::uint64_t k = 0; k < shifts; ++k) {
    for (std::uint64_t l = k; l < shifts; ++l) {
      double dot = 0.0;
      for (std::uint64_t x = 0; x < size; ++x) {
        dot += frame.value_at(x ^ (k << r)) * frame.value_at(x ^ (l << r));
      }
      gram(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = dot * weight;
      gram(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(k)) = dot * weight;
    }
  }

  StabilityReport report;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  report.smallest_eigenvalue = solver.eigenvalues().minCoeff();
  report.largest_eigenvalue = solver.eigenvalues().maxCoeff();
  report.stable = report.smallest_eigenvalue > 1e-6 * report.largest_eigenvalue;
  report.trials = trials;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  double min_sup = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXd a(static_cast<Eigen::Index>(shifts));
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = uni(rng);
    const double amax = a.cwiseAbs().maxCoeff();
    if (amax == 0.0) continue;
    a /= amax;
    double sup = 0.0;
    for (std::uint64_t x = 0; x < size; ++x) {
      double v = 0.0;
      for (std::uint64_t k = 0; k < shifts; ++k) {
        v += a(static_cast<Eigen::Index>(k)) * frame.value_at(x ^ (k << r));
      }
      sup = std::max(sup, std::abs(v));
    }
    min_sup = std::min(min_sup, sup);
  }
  report.min_combination_sup = trials > 0 ? min_sup : 0.0;
  return report;
}

namespace {

void set_overall(Verdict& verdict, OverallVerdict overall, std::string rule) {
  verdict.overall = overall;
  verdict.deciding_rule = std::move(rule);
}

const RuleResult* find_rule(const Verdict& verdict, const std::string& name) {
  for (const auto& rule : verdict.rules) {
    if (rule.name == name) return &rule;
  }
  return nullptr;
}

}  // namespace

Verdict analyze(const Mask& mask, const AnalyzeOptions& options) {
  Verdict verdict;
  if (mask.padded()) {
    verdict.warnings.push_back(
        "mask was zero-padded to length " + std::to_string(mask.length()) +
        "; padding changes the positive index set");
  }

  verdict.necessary_ok = necessary_condition(mask, options.sum_rule_tol);
  if (!verdict.necessary_ok) {
    set_overall(verdict, OverallVerdict::diverges, "necessary_condition");
    return verdict;
  }

  verdict.rules.push_back(positive_mask_verdict(mask));
  verdict.rules.push_back(four_coefficient_criterion(mask));
  verdict.rules.push_back(nonnegative_criterion(mask, options.nonnegative_max_level));
  if (mask.all_nonnegative()) {
    verdict.advisory = gcd_conjecture_flag(IndexSet::positive_indices(mask));
  }

  try {
    const TransitionPair pair = transition_matrices(mask);
    const RestrictedPair restricted =
        restrict_to_difference_subspace(pair, options.sum_rule_tol);
    verdict.jsr = jsr_bounds(restricted.b0, restricted.b1, options.jsr_depth);
    verdict.holder = holder_exponent(*verdict.jsr);
    try {
      verdict.jsr_minimal = minimal_subspace_jsr(pair, options.jsr_depth);
    } catch (const Error& e) {
      verdict.warnings.push_back(std::string("minimal-subspace estimate failed: ") +
                                 e.what());
    }
  } catch (const Error& e) {
    verdict.warnings.push_back(std::string("spectral analysis failed: ") + e.what());
  }

  verdict.probe = convergence_probe(mask, options.probe_iterations, Mode::dyadic,
                                    options.probe);

  // Continuity via the JSR bound is a sufficient certificate; stability of
  // the shifts (the other half of the hypothesis) stays heuristic.
  if (verdict.jsr && verdict.jsr->upper < 1.0) {
    RuleResult rule{.name = "jsr_contraction", .applied = true};
    rule.verdict = RuleVerdict::converges;
    rule.detail = "restricted JSR upper bound " + std::to_string(verdict.jsr->upper) +
                  " < 1 certifies a continuous refinable function (shift "
                  "stability checked only heuristically)";
    verdict.rules.push_back(rule);
  }
  if (verdict.probe->overflow) {
    RuleResult rule{.name = "probe_overflow", .applied = true};
    rule.verdict = RuleVerdict::diverges;
    rule.detail = "cascade differences overflowed the divergence threshold";
    verdict.rules.push_back(rule);
  }

  // The printed quantifiers of the nonnegative criterion are ambiguous;
  // never let it overrule direct numerical evidence. A converging probe
  // counts as evidence against a divergence verdict only when it rests on
  // genuine decay: exactly frozen differences (d_n == 0) say nothing about
  // the points between the shared grids.
  const bool probe_decays = verdict.probe->verdict == ProbeVerdict::converging &&
                            !verdict.probe->diffs.empty() &&
                            verdict.probe->diffs.back() > 0.0;
  const RuleResult* nonneg = find_rule(verdict, "nonnegative");
  const bool nn_conflict =
      nonneg && nonneg->applied &&
      ((nonneg->verdict == RuleVerdict::converges &&
        verdict.probe->verdict == ProbeVerdict::diverging) ||
       (nonneg->verdict == RuleVerdict::diverges && probe_decays));
  if (nn_conflict) {
    set_overall(verdict, OverallVerdict::undetermined, "nonnegative_vs_probe_conflict");
    verdict.warnings.push_back(
        "nonnegative-criterion verdict contradicts the cascade probe; "
        "downgraded to undetermined with both pieces of evidence attached");
    return verdict;
  }

  for (const char* name : {"positive_mask", "four_coefficient", "nonnegative",
                           "jsr_contraction"}) {
    const RuleResult* rule = find_rule(verdict, name);
    if (rule && rule->applied && rule->verdict == RuleVerdict::converges) {
      set_overall(verdict, OverallVerdict::converges, name);
      return verdict;
    }
  }
  for (const char* name : {"four_coefficient", "nonnegative", "probe_overflow"}) {
    const RuleResult* rule = find_rule(verdict, name);
    if (rule && rule->applied && rule->verdict == RuleVerdict::diverges) {
      set_overall(verdict, OverallVerdict::diverges, name);
      return verdict;
    }
  }
  set_overall(verdict, OverallVerdict::undetermined, "none");
  return verdict;
}

}  // namespace dyadic
