#include <doctest.h>

#include <cmath>
#include <random>

#include "dyadic/affine.hpp"
#include "dyadic/errors.hpp"
#include "dyadic/fractal_curve.hpp"
#include "dyadic/mask.hpp"
#include "dyadic/modulus.hpp"
#include "dyadic/subdivision.hpp"

using dyadic::AffineOperator;
using dyadic::AffinePair;
using dyadic::CurveSamples;
using dyadic::dyadic_modulus;
using dyadic::empirical_holder;
using dyadic::fixed_point;
using dyadic::sample_curve;

namespace {

AffinePair random_contractive_pair(std::mt19937_64& rng, Eigen::Index dim,
                                   double norm_cap) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  auto make = [&]() {
    AffineOperator op;
    op.linear = Eigen::MatrixXd::NullaryExpr(dim, dim, [&] { return uni(rng); });
    const double nrm = op.linear.jacobiSvd().singularValues()(0);
    if (nrm > 0.0) op.linear *= norm_cap / nrm;
    op.translation = Eigen::VectorXd::NullaryExpr(dim, [&] { return uni(rng); });
    return op;
  };
  return {make(), make()};
}

}  // namespace

TEST_CASE("fixed points of affine contractions") {
  SUBCASE("zero linear part returns the translation") {
    AffineOperator op{Eigen::MatrixXd::Zero(3, 3), Eigen::Vector3d(1, 2, 3)};
    CHECK((fixed_point(op) - Eigen::Vector3d(1, 2, 3)).norm() == 0.0);
  }

  SUBCASE("half identity doubles the translation") {
    AffineOperator op{0.5 * Eigen::MatrixXd::Identity(2, 2), Eigen::Vector2d(1, -1)};
    CHECK((fixed_point(op) - Eigen::Vector2d(2, -2)).norm() <= 1e-14);
  }

  SUBCASE("random contractions satisfy v = Lv + t") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
      const AffinePair pair = random_contractive_pair(rng, 3, 0.85);
      const Eigen::VectorXd v = fixed_point(pair.a0);
      CHECK((v - (pair.a0.linear * v + pair.a0.translation)).norm() <= 1e-10);
    }
  }

  SUBCASE("expanding linear parts are rejected") {
    AffineOperator op{2.0 * Eigen::MatrixXd::Identity(2, 2), Eigen::Vector2d(1, 1)};
    CHECK_THROWS_AS(fixed_point(op), dyadic::NoContractiveFixedPoint);
  }
}

TEST_CASE("curve sampling") {
  SUBCASE("the linear function solves the one-dimensional equation") {
    AffinePair pair;
    pair.a0 = {0.5 * Eigen::MatrixXd::Identity(1, 1), Eigen::VectorXd::Zero(1)};
    pair.a1 = {0.5 * Eigen::MatrixXd::Identity(1, 1),
               Eigen::VectorXd::Constant(1, 0.5)};
    const CurveSamples curve = sample_curve(pair, 8);
    REQUIRE(curve.points.size() == 256);
    for (std::size_t j = 0; j < curve.points.size(); ++j) {
      const double t = std::ldexp(static_cast<double>(j), -8);
      CHECK(curve.points[j](0) == doctest::Approx(t).epsilon(1e-14));
    }
  }

  SUBCASE("t = 0 and t = 1/2 samples") {
    std::mt19937_64 rng(19);
    const AffinePair pair = random_contractive_pair(rng, 2, 0.8);
    const CurveSamples curve = sample_curve(pair, 6);
    const Eigen::VectorXd v0 = fixed_point(pair.a0);
    CHECK((curve.points[0] - v0).norm() <= 1e-10);
    CHECK((curve.points[32] - pair.a1.apply(v0)).norm() <= 1e-12);
  }

  SUBCASE("self-similarity recursion holds at every sampled point") {
    std::mt19937_64 rng(29);
    const AffinePair pair = random_contractive_pair(rng, 2, 0.8);
    const unsigned depth = 10;
    const CurveSamples fine = sample_curve(pair, depth);
    const CurveSamples coarse = sample_curve(pair, depth - 1);
    const std::size_t half = fine.points.size() / 2;
    for (std::size_t j = 0; j < fine.points.size(); ++j) {
      // v(t) = A_{d1} v(2t (-) d1): dropping the leading digit halves the index.
      const Eigen::VectorXd& tail = coarse.points[j % half];
      const Eigen::VectorXd expected =
          j < half ? pair.a0.apply(tail) : pair.a1.apply(tail);
      CHECK((fine.points[j] - expected).norm() <= 1e-10);
    }
  }

  SUBCASE("pairs violating the cross condition still satisfy the recursion") {
    // A0 v1 != A1 v0 here; dyadic curves tolerate the jump at 1/2.
    AffinePair pair;
    pair.a0 = {0.4 * Eigen::MatrixXd::Identity(1, 1), Eigen::VectorXd::Zero(1)};
    pair.a1 = {0.3 * Eigen::MatrixXd::Identity(1, 1),
               Eigen::VectorXd::Constant(1, 5.0)};
    const Eigen::VectorXd v0 = fixed_point(pair.a0);
    const Eigen::VectorXd v1 = fixed_point(pair.a1);
    CHECK((pair.a0.apply(v1) - pair.a1.apply(v0)).norm() > 0.1);

    const CurveSamples fine = sample_curve(pair, 8);
    const CurveSamples coarse = sample_curve(pair, 7);
    const std::size_t half = fine.points.size() / 2;
    for (std::size_t j = 0; j < fine.points.size(); ++j) {
      const Eigen::VectorXd& tail = coarse.points[j % half];
      const Eigen::VectorXd expected =
          j < half ? pair.a0.apply(tail) : pair.a1.apply(tail);
      CHECK((fine.points[j] - expected).norm() <= 1e-10);
    }
  }

  SUBCASE("translation conjugation shifts every sample") {
    std::mt19937_64 rng(37);
    const AffinePair pair = random_contractive_pair(rng, 2, 0.8);
    const Eigen::Vector2d shift(0.7, -1.2);
    AffinePair moved = pair;
    // conjugation by x -> x + shift: translation picks up (I - L) shift
    moved.a0.translation += (Eigen::MatrixXd::Identity(2, 2) - moved.a0.linear) * shift;
    moved.a1.translation += (Eigen::MatrixXd::Identity(2, 2) - moved.a1.linear) * shift;

    const CurveSamples base = sample_curve(pair, 8);
    const CurveSamples shifted = sample_curve(moved, 8);
    for (std::size_t j = 0; j < base.points.size(); ++j) {
      CHECK((shifted.points[j] - base.points[j] - shift).norm() <= 1e-10);
    }
  }

  SUBCASE("non-contractive pairs are refused with the violated bound") {
    AffinePair pair;
    pair.a0 = {1.2 * Eigen::MatrixXd::Identity(2, 2), Eigen::Vector2d(0, 0)};
    pair.a1 = {0.5 * Eigen::MatrixXd::Identity(2, 2), Eigen::Vector2d(1, 1)};
    CHECK_THROWS_AS(sample_curve(pair, 6), dyadic::ContinuityNotCertified);
  }
}

TEST_CASE("dyadic modulus of continuity") {
  SUBCASE("constant frames have zero modulus") {
    dyadic::SequenceFrame frame;
    frame.resolution = 8;
    frame.support_bound = 2;
    frame.values.assign(2u << 8, 3.25);
    for (unsigned n = 1; n < 8; ++n) CHECK(dyadic_modulus(frame, n) == 0.0);
  }

  SUBCASE("indicator of [0,1) on [0,2): offsets below 1 never flip the unit bit") {
    dyadic::SequenceFrame frame;
    frame.resolution = 6;
    frame.support_bound = 2;
    frame.values.assign(2u << 6, 0.0);
    for (std::size_t i = 0; i < (1u << 6); ++i) frame.values[i] = 1.0;
    for (unsigned n = 1; n < 6; ++n) CHECK(dyadic_modulus(frame, n) == 0.0);
  }

  SUBCASE("modulus decay of a curve tracks the contraction factor") {
    AffinePair pair;
    pair.a0 = {0.5 * Eigen::MatrixXd::Identity(1, 1), Eigen::VectorXd::Zero(1)};
    pair.a1 = {0.5 * Eigen::MatrixXd::Identity(1, 1),
               Eigen::VectorXd::Constant(1, 0.5)};
    const CurveSamples curve = sample_curve(pair, 12);
    std::vector<std::pair<unsigned, double>> moduli;
    for (unsigned n = 3; n <= 9; ++n) moduli.emplace_back(n, dyadic_modulus(curve, n));
    const auto fit = empirical_holder(moduli);
    CHECK(!fit.locally_constant);
    CHECK(fit.slope == doctest::Approx(1.0).epsilon(0.05));
  }

  SUBCASE("resolution guards") {
    dyadic::SequenceFrame frame;
    frame.resolution = 4;
    frame.support_bound = 1;
    frame.values.assign(1u << 4, 0.0);
    CHECK_THROWS_AS(dyadic_modulus(frame, 4), dyadic::Error);
    frame.resolution = 15;
    frame.values.assign(1u << 15, 0.0);
    CHECK_THROWS_AS(dyadic_modulus(frame, 3), dyadic::ResourceLimit);
    dyadic::ModulusOptions raised;
    raised.max_resolution = 15;
    CHECK(dyadic_modulus(frame, 3, raised) == 0.0);
  }
}

TEST_CASE("empirical holder exponent fits") {
  SUBCASE("exact powers give slope 1") {
    std::vector<std::pair<unsigned, double>> moduli;
    for (unsigned n = 2; n <= 9; ++n) moduli.emplace_back(n, std::ldexp(1.0, -static_cast<int>(n)));
    CHECK(empirical_holder(moduli).slope == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("constant factors drop out of the slope") {
    std::vector<std::pair<unsigned, double>> moduli;
    for (unsigned n = 2; n <= 9; ++n) {
      moduli.emplace_back(n, 4.0 * std::pow(2.0, -0.5 * n));
    }
    CHECK(empirical_holder(moduli).slope == doctest::Approx(0.5).epsilon(1e-12));
  }

  SUBCASE("all-zero moduli flag a locally constant function") {
    std::vector<std::pair<unsigned, double>> moduli{{3, 0.0}, {4, 0.0}, {5, 0.0}};
    CHECK(empirical_holder(moduli).locally_constant);
  }

  SUBCASE("fewer than three positive scales are rejected") {
    std::vector<std::pair<unsigned, double>> moduli{{3, 0.5}, {4, 0.25}, {5, 0.0}};
    CHECK_THROWS_AS(empirical_holder(moduli), dyadic::Error);
  }
}

TEST_CASE("holder bound from a certified jsr bracket") {
  // w(f, 2^-n) <= C (rho + eps)^n with C fitted at the coarsest scale.
  const dyadic::Mask mask({0.4, -0.1, 0.6, 1.1});
  const dyadic::SequenceFrame frame = dyadic::cascade(mask, 12, dyadic::Mode::dyadic);
  const double rho_bar = 0.5;  // exact for this mask's 1x1 restriction
  const double eps = 0.02;

  std::vector<std::pair<unsigned, double>> moduli;
  for (unsigned n = 4; n <= 10; ++n) moduli.emplace_back(n, dyadic_modulus(frame, n));
  const double c = moduli.front().second / std::pow(rho_bar + eps, moduli.front().first);
  for (const auto& [n, w] : moduli) {
    CHECK(w <= c * std::pow(rho_bar + eps, n) * (1.0 + 1e-9));
  }
}
