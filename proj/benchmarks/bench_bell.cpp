#include <benchmark/benchmark.h>

#include "stieltjes/bell.hpp"
#include "stieltjes/gamma.hpp"

using namespace stieltjes;

static void BM_bell_complete(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bell_complete(n));
  state.counters["terms"] = static_cast<double>(bell_complete(n).size());
}
BENCHMARK(BM_bell_complete)->DenseRange(4, 20, 4)->Unit(benchmark::kMicrosecond);

static void BM_bell_recurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BellPoly y = bell_complete(1);
    for (int m = 1; m < n; ++m) y = bell_next_by_recurrence(y);
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_bell_recurrence)->DenseRange(4, 20, 4)->Unit(benchmark::kMicrosecond);

static void BM_bell_eval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BellPoly y = bell_complete(n);
  std::vector<XReal> args;
  for (int i = 1; i <= n; ++i) args.emplace_back(XReal(1L, Bits{256}) / i);
  for (auto _ : state) benchmark::DoNotOptimize(bell_eval(y, args));
}
BENCHMARK(BM_bell_eval)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

static void BM_gamma_derivative_at_1(benchmark::State& state) {
  XReal one(1L, Bits{256});
  for (auto _ : state) benchmark::DoNotOptimize(gamma_derivative(state.range(0), one));
}
BENCHMARK(BM_gamma_derivative_at_1)->Arg(2)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
