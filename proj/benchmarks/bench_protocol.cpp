#include <benchmark/benchmark.h>

#include "dirng/protocol.hpp"

namespace {

void BM_ProtocolRounds(benchmark::State& state) {
  const dirng::GameSpec spec = dirng::game_from_beta(0.0);
  const dirng::DeviceModel dev = dirng::reference_device(spec.theta);
  dirng::ProtocolParams params;
  params.n = static_cast<std::uint64_t>(state.range(0));
  params.gamma = 0.1;
  params.xi = 0.05;
  params.eps_s = 1e-8;
  params.eps_prime = 1e-8;
  params.seed = 13;
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(dirng::run_protocol(dev, spec, params, threads));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ProtocolRounds)
    ->Args({100000, 1})
    ->Args({1000000, 1})
    ->Args({1000000, 4});

}  // namespace
