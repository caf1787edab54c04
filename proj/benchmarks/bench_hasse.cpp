#include <benchmark/benchmark.h>

#include "stieltjes/hasse.hpp"

using namespace stieltjes;

static void BM_stieltjes_gamma(benchmark::State& state) {
  HasseConfig cfg;
  cfg.n_max = state.range(0);
  cfg.tolerance = 1.0;  // timing only
  const long p = state.range(1);
  XReal u(1L, Bits{256});
  for (auto _ : state) benchmark::DoNotOptimize(stieltjes_gamma(p, u, cfg));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_stieltjes_gamma)
    ->ArgsProduct({{256, 512, 1024, 2048}, {0, 2}})
    ->Unit(benchmark::kMillisecond);

static void BM_inner_alt_sum(benchmark::State& state) {
  const long n = state.range(0);
  XReal u(1L, Bits{n + 128});
  for (auto _ : state) benchmark::DoNotOptimize(inner_alt_sum(n, u, 2, 1));
}
BENCHMARK(BM_inner_alt_sum)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

static void BM_eta_sequence(benchmark::State& state) {
  std::vector<XReal> g;
  for (long k = 0; k <= state.range(0); ++k) g.emplace_back(XReal(1L, Bits{256}) / (k + 2));
  for (auto _ : state) benchmark::DoNotOptimize(eta_sequence(state.range(0), g));
}
BENCHMARK(BM_eta_sequence)->Arg(3)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
