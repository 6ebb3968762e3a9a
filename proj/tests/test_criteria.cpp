#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dyadic/criteria.hpp"
#include "dyadic/index_set.hpp"
#include "dyadic/mask.hpp"
#include "dyadic/presets.hpp"
#include "dyadic/subdivision.hpp"

using dyadic::analyze;
using dyadic::four_coefficient_criterion;
using dyadic::IndexSet;
using dyadic::Mask;
using dyadic::Mode;
using dyadic::necessary_condition;
using dyadic::nonnegative_criterion;
using dyadic::OverallVerdict;
using dyadic::positive_mask_verdict;
using dyadic::RuleVerdict;
using dyadic::Verdict;

namespace {

/// Mask with coefficient 1/2 at indices {0,6,9,15}: even and odd sums are 1.
Mask gap_mask() {
  std::vector<double> c(16, 0.0);
  c[0] = c[6] = c[9] = c[15] = 0.5;
  return Mask(c);
}

}  // namespace

TEST_CASE("necessary condition checks both parity sums") {
  CHECK(necessary_condition(Mask({0.25, 0.75, 0.75, 0.25})));
  CHECK(necessary_condition(Mask({0.3, 0.1, 0.7, 0.9})));
  CHECK(!necessary_condition(Mask({1, 1, 1, 1})));
}

TEST_CASE("positive mask rule") {
  const auto ex1 = positive_mask_verdict(Mask({0.3, 0.1, 0.7, 0.9}));
  CHECK(ex1.applied);
  CHECK(ex1.verdict == RuleVerdict::converges);

  const auto ex3 = positive_mask_verdict(Mask({0.6, 1.1, 0.4, -0.1}));
  CHECK(!ex3.applied);

  const auto ex7 = positive_mask_verdict(Mask(std::vector<double>(8, 0.25)));
  CHECK(ex7.applied);
  CHECK(ex7.verdict == RuleVerdict::converges);
}

TEST_CASE("index set expansion") {
  SUBCASE("worked example reproduces the published level-2 set") {
    const IndexSet set{{0, 6, 9, 15}};
    const std::set<std::uint64_t> expected = {0,  6,  9,  15, 12, 10, 5,  3,
                                              18, 20, 27, 29, 30, 24, 23, 17};
    CHECK(set.level(2) == expected);
  }

  SUBCASE("absorption identity: I (+) 2I (+) 24 = I (+) 2I") {
    const IndexSet set{{0, 6, 9, 15}};
    const auto level2 = set.level(2);
    std::set<std::uint64_t> shifted;
    for (std::uint64_t v : level2) shifted.insert(v ^ 24u);
    CHECK(shifted == level2);
  }

  SUBCASE("xor convolution equals brute-force tuple enumeration") {
    const std::vector<std::vector<std::uint64_t>> cases = {
        {0, 3}, {1, 2, 7}, {0, 6, 9, 15}, {2, 5, 11, 14}};
    for (const auto& indices : cases) {
      const IndexSet set{indices};
      for (unsigned level = 1; level <= 4; ++level) {
        std::set<std::uint64_t> brute;
        const std::size_t m = indices.size();
        std::size_t total = 1;
        for (unsigned k = 0; k < level; ++k) total *= m;
        for (std::size_t code = 0; code < total; ++code) {
          std::size_t rest = code;
          std::uint64_t sum = 0;
          for (unsigned k = 0; k < level; ++k) {
            sum ^= indices[rest % m] << k;
            rest /= m;
          }
          brute.insert(sum);
        }
        CHECK(set.level(level) == brute);
        CHECK(set.level(level).size() <= total);
      }
    }
  }
}

TEST_CASE("gcd conjecture advisory") {
  const auto three = dyadic::gcd_conjecture_flag(IndexSet{{0, 6, 9, 15}});
  CHECK(three.gcd == 3);
  CHECK(!three.conjectured_convergent);

  const auto one = dyadic::gcd_conjecture_flag(IndexSet{{0, 1, 2, 3}});
  CHECK(one.gcd == 1);
  CHECK(one.conjectured_convergent);

  const auto two = dyadic::gcd_conjecture_flag(IndexSet{{0, 2, 4, 6}});
  CHECK(two.gcd == 2);
  CHECK(!two.conjectured_convergent);

  // interpolatory shape: the only even element is the first one
  const auto endpoint =
      dyadic::gcd_conjecture_flag(IndexSet{{0, 1, 3, 5, 7, 9, 11, 13, 15}});
  CHECK(endpoint.note.find("caveat") != std::string::npos);
}

TEST_CASE("nonnegative coverage criterion") {
  SUBCASE("strictly positive masks pass at level one") {
    dyadic::NonnegativeEvidence evidence;
    const auto rule =
        nonnegative_criterion(Mask({0.3, 0.1, 0.7, 0.9}), 0, &evidence);
    CHECK(rule.applied);
    CHECK(rule.verdict == RuleVerdict::converges);
    CHECK(evidence.passed_level == 1);
  }

  SUBCASE("the gap mask diverges with stable gaps") {
    dyadic::NonnegativeEvidence evidence;
    const auto rule = nonnegative_criterion(gap_mask(), 0, &evidence);
    CHECK(rule.applied);
    CHECK(rule.verdict == RuleVerdict::diverges);
    CHECK(evidence.passed_level == 0);
    REQUIRE(evidence.levels.size() >= 2);
    const std::set<std::uint64_t> expected = {0,  6,  9,  15, 12, 10, 5,  3,
                                              18, 20, 27, 29, 30, 24, 23, 17};
    CHECK(evidence.levels[1] == expected);
  }

  SUBCASE("interpolatory mask passes at level two") {
    std::vector<double> c(16, 0.0);
    c[0] = 1.0;
    for (std::size_t i = 1; i < 16; i += 2) c[i] = 0.125;
    dyadic::NonnegativeEvidence evidence;
    const auto rule = nonnegative_criterion(Mask(c), 0, &evidence);
    CHECK(rule.verdict == RuleVerdict::converges);
    CHECK(evidence.passed_level == 2);
  }

  SUBCASE("signed masks are not applicable") {
    const auto rule = nonnegative_criterion(Mask({0.6, 1.1, 0.4, -0.1}));
    CHECK(!rule.applied);
  }
}

TEST_CASE("four coefficient criterion") {
  const auto ex6 = four_coefficient_criterion(Mask({0.4, -0.1, 0.6, 1.1}));
  CHECK(ex6.applied);
  CHECK(ex6.verdict == RuleVerdict::converges);

  const auto ex5 = four_coefficient_criterion(Mask({2.6, 0.7, -1.6, 0.3}));
  CHECK(ex5.applied);
  CHECK(ex5.verdict == RuleVerdict::diverges);

  const auto flat = four_coefficient_criterion(Mask({0.5, 0.5, 0.5, 0.5}));
  CHECK(flat.applied);
  CHECK(flat.verdict == RuleVerdict::converges);

  const auto edge = four_coefficient_criterion(Mask({1.5, 0.5, -0.5, 0.5}));
  CHECK(edge.applied);
  CHECK(edge.verdict == RuleVerdict::undetermined);

  const auto eight = four_coefficient_criterion(Mask(std::vector<double>(8, 0.25)));
  CHECK(!eight.applied);
}

TEST_CASE("stability probe") {
  SUBCASE("indicator shifts are orthogonal") {
    dyadic::SequenceFrame frame = dyadic::cascade(Mask({1.0, 1.0}), 6, Mode::dyadic);
    frame.support_bound = 2;  // view phi on [0,2) so there are two shifts
    frame.values.resize(2u << 6, 0.0);
    const auto report = dyadic::stability_probe(frame);
    CHECK(report.stable);
    CHECK(report.smallest_eigenvalue ==
          doctest::Approx(report.largest_eigenvalue).epsilon(1e-9));
  }

  SUBCASE("zero frames are unstable") {
    dyadic::SequenceFrame frame;
    frame.resolution = 5;
    frame.support_bound = 2;
    frame.values.assign(2u << 5, 0.0);
    const auto report = dyadic::stability_probe(frame);
    CHECK(!report.stable);
    CHECK(report.smallest_eigenvalue == 0.0);
  }

  SUBCASE("pinned regression value for the symmetric mask") {
    // The limit of this scheme is constant 1/2, so the two shifts coincide
    // and the Gram matrix is numerically rank one.
    const auto frame = dyadic::cascade(Mask({0.25, 0.75, 0.75, 0.25}), 10, Mode::dyadic);
    const auto report = dyadic::stability_probe(frame);
    CHECK(!report.stable);
    CHECK(report.largest_eigenvalue == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(report.smallest_eigenvalue / report.largest_eigenvalue <= 1e-6);
  }
}

TEST_CASE("analyze composes the verdict") {
  SUBCASE("four-coefficient convergence decides ex6") {
    const Verdict v = analyze(Mask({0.4, -0.1, 0.6, 1.1}));
    CHECK(v.necessary_ok);
    CHECK(v.overall == OverallVerdict::converges);
    CHECK(v.deciding_rule == "four_coefficient");
    REQUIRE(v.holder.has_value());
    CHECK(v.holder->lo <= 1.0);
    CHECK(v.holder->hi >= 1.0);
    REQUIRE(v.jsr.has_value());
    CHECK(v.jsr->lower == 0.5);
    CHECK(v.jsr->upper == 0.5);
  }

  SUBCASE("divergent mask") {
    const Verdict v = analyze(Mask({2.6, 0.7, -1.6, 0.3}));
    CHECK(v.overall == OverallVerdict::diverges);
    CHECK(v.deciding_rule == "four_coefficient");
  }

  SUBCASE("necessary-condition failure short-circuits to divergence") {
    const Verdict v = analyze(Mask({1, 1, 1, 1}));
    CHECK(!v.necessary_ok);
    CHECK(v.overall == OverallVerdict::diverges);
    CHECK(v.deciding_rule == "necessary_condition");
  }

  SUBCASE("gap mask diverges via the nonnegative criterion") {
    const Verdict v = analyze(gap_mask());
    CHECK(v.necessary_ok);
    CHECK(v.overall == OverallVerdict::diverges);
    CHECK(v.deciding_rule == "nonnegative");
    CHECK(v.advisory.applicable);
    CHECK(v.advisory.gcd == 3);
  }
}

TEST_CASE("preset masks match the published coefficient lists") {
  const auto& table = dyadic::presets();
  REQUIRE(table.size() == 9);
  CHECK(table[0].mask == std::vector<double>{0.3, 0.1, 0.7, 0.9});
  CHECK(table[1].mask == std::vector<double>{0.6, 0.9, 0.4, 0.1});
  CHECK(table[2].mask == std::vector<double>{0.6, 1.1, 0.4, -0.1});
  CHECK(table[3].mask == std::vector<double>{0.25, 0.75, 0.75, 0.25});
  CHECK(table[4].mask == std::vector<double>{2.6, 0.7, -1.6, 0.3});
  CHECK(table[5].mask == std::vector<double>{0.4, -0.1, 0.6, 1.1});
  CHECK(table[6].mask == std::vector<double>(8, 0.25));
  CHECK(table[7].mask ==
        std::vector<double>{0.125, 0.375, 0.125, 0.375, 0.375, 0.125, 0.375, 0.125});
  std::vector<double> ex9{1, 0.125, 0, 0.125, 0, 0.125, 0, 0.125,
                          0, 0.125, 0, 0.125, 0, 0.125, 0, 0.125};
  CHECK(table[8].mask == ex9);
}

TEST_CASE("rule consistency across the presets") {
  for (const auto& preset : dyadic::presets()) {
    CAPTURE(preset.name);
    const Verdict v = analyze(Mask(preset.mask));

    // no two applied rules contradict each other
    bool saw_converges = false, saw_diverges = false;
    for (const auto& rule : v.rules) {
      if (!rule.applied) continue;
      saw_converges |= rule.verdict == RuleVerdict::converges;
      saw_diverges |= rule.verdict == RuleVerdict::diverges;
    }
    CHECK(!(saw_converges && saw_diverges));

    // probe agreement with the documented dyadic outcome
    REQUIRE(v.probe.has_value());
    if (preset.dyadic_converges.has_value()) {
      if (*preset.dyadic_converges) {
        CHECK(v.probe->verdict == dyadic::ProbeVerdict::converging);
        CHECK(v.overall == OverallVerdict::converges);
      } else {
        CHECK(v.probe->verdict == dyadic::ProbeVerdict::diverging);
        CHECK(v.overall == OverallVerdict::diverges);
      }
    }

    // a converging probe presupposes the parity sum rule
    if (v.probe->verdict == dyadic::ProbeVerdict::converging) {
      CHECK(necessary_condition(Mask(preset.mask)));
    }
  }
}

TEST_CASE("four-coefficient rule agrees with the spectral machinery") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double c0 = uni(rng), c1 = uni(rng);
    const Mask mask({c0, c1, 1 - c0, 1 - c1});
    const auto restricted = dyadic::restrict_to_difference_subspace(
        dyadic::transition_matrices(mask));
    const auto est = dyadic::jsr_bounds(restricted.b0, restricted.b1, 6);
    CHECK(est.lower == std::abs(c0 - c1));
    CHECK(est.upper == std::abs(c0 - c1));

    const auto rule = four_coefficient_criterion(mask);
    REQUIRE(rule.applied);
    if (est.upper < 1.0) {
      CHECK(rule.verdict == RuleVerdict::converges);
    } else if (est.lower > 1.0) {
      CHECK(rule.verdict == RuleVerdict::diverges);
    }
  }
}
