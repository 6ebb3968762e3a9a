#include <benchmark/benchmark.h>

#include "dyadic/mask.hpp"
#include "dyadic/presets.hpp"
#include "dyadic/subdivision.hpp"

namespace {

const dyadic::Mask& bench_mask(const char* name) {
  static std::map<std::string, dyadic::Mask> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    it = cache.emplace(name, dyadic::Mask(dyadic::find_preset(name)->mask)).first;
  }
  return it->second;
}

void BM_cascade_dyadic(benchmark::State& state) {
  const auto& mask = bench_mask("ex8");
  const auto iters = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto frame = dyadic::cascade(mask, iters, dyadic::Mode::dyadic);
    benchmark::DoNotOptimize(frame.values.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_cascade_dyadic)->DenseRange(6, 16, 2);

void BM_cascade_classical(benchmark::State& state) {
  const auto& mask = bench_mask("ex8");
  const auto iters = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto frame = dyadic::cascade(mask, iters, dyadic::Mode::classical);
    benchmark::DoNotOptimize(frame.values.data());
  }
}
BENCHMARK(BM_cascade_classical)->DenseRange(6, 16, 2);

void BM_convergence_probe(benchmark::State& state) {
  const auto& mask = bench_mask("ex6");
  const auto iters = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto report = dyadic::convergence_probe(mask, iters, dyadic::Mode::dyadic);
    benchmark::DoNotOptimize(report.fitted_ratio);
  }
}
BENCHMARK(BM_convergence_probe)->Arg(10)->Arg(14)->Arg(18);

}  // namespace
