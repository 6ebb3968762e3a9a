#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "dyadic/fractal_curve.hpp"
#include "dyadic/mask.hpp"
#include "dyadic/modulus.hpp"
#include "dyadic/presets.hpp"
#include "dyadic/subdivision.hpp"

namespace {

dyadic::AffinePair de_rham_like_pair() {
  dyadic::AffinePair pair;
  Eigen::Matrix2d l0, l1;
  l0 << 0.45, -0.2, 0.2, 0.45;
  l1 << 0.45, 0.2, -0.2, 0.45;
  pair.a0 = {l0, Eigen::Vector2d(0.0, 0.0)};
  pair.a1 = {l1, Eigen::Vector2d(0.55, 0.2)};
  return pair;
}

void BM_sample_curve(benchmark::State& state) {
  const auto pair = de_rham_like_pair();
  const auto depth = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto curve = dyadic::sample_curve(pair, depth);
    benchmark::DoNotOptimize(curve.points.data());
  }
}
BENCHMARK(BM_sample_curve)->DenseRange(8, 16, 2);

void BM_dyadic_modulus(benchmark::State& state) {
  const dyadic::Mask mask(dyadic::find_preset("ex6")->mask);
  const auto frame = dyadic::cascade(mask, 12, dyadic::Mode::dyadic);
  const auto scale = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dyadic::dyadic_modulus(frame, scale));
  }
}
BENCHMARK(BM_dyadic_modulus)->DenseRange(4, 10, 2);

}  // namespace
