#include <benchmark/benchmark.h>

#include "dirng/dilution.hpp"

namespace {

void BM_TypicalSet(benchmark::State& state) {
  const double theta = 0.39;
  const double delta = 0.1 * dirng::typicality_spread(theta);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(dirng::typical_set(theta, n, delta));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TypicalSet)->Range(1000, 1000000)->Complexity(benchmark::oN);

void BM_ExactDistance(benchmark::State& state) {
  const double theta = 0.39;
  const double delta = 0.1 * dirng::typicality_spread(theta);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(dirng::exact_dilution_distance(theta, n, delta));
}
BENCHMARK(BM_ExactDistance)->Arg(10000)->Arg(100000);

}  // namespace
