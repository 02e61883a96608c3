#include <benchmark/benchmark.h>

#include "dirng/devices.hpp"
#include "dirng/game.hpp"

namespace {

void BM_OutcomeDistribution(benchmark::State& state) {
  const dirng::DeviceModel dev = dirng::reference_device(0.4);
  for (auto _ : state) {
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 3; ++y)
        benchmark::DoNotOptimize(dirng::outcome_distribution(dev, x, y));
  }
  state.SetItemsProcessed(state.iterations() * 6);
}
BENCHMARK(BM_OutcomeDistribution);

void BM_WinningProbability(benchmark::State& state) {
  const dirng::GameSpec spec = dirng::game_from_beta(0.7);
  const dirng::DeviceModel dev = dirng::reference_device(spec.theta);
  for (auto _ : state)
    benchmark::DoNotOptimize(dirng::winning_probability(dev, spec));
}
BENCHMARK(BM_WinningProbability);

}  // namespace
