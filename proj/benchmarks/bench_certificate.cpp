#include <benchmark/benchmark.h>

#include "dirng/eat.hpp"

namespace {

void BM_Certificate(benchmark::State& state) {
  const dirng::GameSpec spec = dirng::game_from_beta(0.0);
  const dirng::CertificateParams params{1e10, 0.1, 1e-6, 1e-9, 1e-9};
  for (auto _ : state)
    benchmark::DoNotOptimize(dirng::certificate(spec, params));
}
BENCHMARK(BM_Certificate);

}  // namespace
