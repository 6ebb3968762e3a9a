#include <benchmark/benchmark.h>

#include "dyadic/jsr.hpp"
#include "dyadic/mask.hpp"
#include "dyadic/presets.hpp"
#include "dyadic/refinable.hpp"
#include "dyadic/transition.hpp"

namespace {

void BM_jsr_bounds_ex8(benchmark::State& state) {
  const dyadic::Mask mask(dyadic::find_preset("ex8")->mask);
  const auto restricted =
      dyadic::restrict_to_difference_subspace(dyadic::transition_matrices(mask));
  const auto depth = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto est = dyadic::jsr_bounds(restricted.b0, restricted.b1, depth);
    benchmark::DoNotOptimize(est.upper);
  }
}
BENCHMARK(BM_jsr_bounds_ex8)->DenseRange(4, 16, 4);

void BM_jsr_bounds_interpolatory(benchmark::State& state) {
  // ex9's 7x7 restriction exercises the pruned product search hardest.
  const dyadic::Mask mask(dyadic::find_preset("ex9")->mask);
  const auto restricted =
      dyadic::restrict_to_difference_subspace(dyadic::transition_matrices(mask));
  const auto depth = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto est = dyadic::jsr_bounds(restricted.b0, restricted.b1, depth);
    benchmark::DoNotOptimize(est.upper);
  }
}
BENCHMARK(BM_jsr_bounds_interpolatory)->Arg(8)->Arg(10)->Arg(12);

void BM_refinable_samples(benchmark::State& state) {
  const dyadic::Mask mask(dyadic::find_preset("ex2")->mask);
  const auto depth = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto frame = dyadic::refinable_vector_samples(mask, depth);
    benchmark::DoNotOptimize(frame.values.data());
  }
}
BENCHMARK(BM_refinable_samples)->DenseRange(8, 14, 2);

}  // namespace
