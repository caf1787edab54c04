#include <benchmark/benchmark.h>

#include "stieltjes/kernels.hpp"
#include "stieltjes/quadrature.hpp"

using namespace stieltjes;

static void BM_omega_integral(benchmark::State& state) {
  const Bits p{state.range(0)};
  XReal tol = ldexp(XReal(1L, p), -(p.value - 32));
  for (auto _ : state) {
    auto r = integrate_unit([](const XReal& y, const XReal& c) { return omega_kernel(y, c); }, tol);
    benchmark::DoNotOptimize(r);
    state.counters["evals"] = static_cast<double>(r.evaluations);
  }
}
BENCHMARK(BM_omega_integral)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_loglog_moment(benchmark::State& state) {
  const Bits p{256};
  const int n = static_cast<int>(state.range(0));
  XReal tol = ldexp(XReal(1L, p), -(p.value - 32));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_unit(
        [n](const XReal& y, const XReal& c) {
          return omega_kernel(y, c) * loglog_power_kernel(y, c, n);
        },
        tol));
  }
}
BENCHMARK(BM_loglog_moment)->DenseRange(0, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_bose_laplace(benchmark::State& state) {
  const Bits p{state.range(0)};
  XReal tol = ldexp(XReal(1L, p), -(p.value - 32));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_halfline([](const XReal& x) { return bose_kernel(x) * exp(-x); }, tol));
  }
}
BENCHMARK(BM_bose_laplace)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_omega_kernel(benchmark::State& state) {
  const Bits p{256};
  XReal y = XReal(1L, p) - ldexp(XReal(1L, p), -static_cast<long>(state.range(0)));
  XReal c = 1 - y;
  for (auto _ : state) benchmark::DoNotOptimize(omega_kernel(y, c));
}
BENCHMARK(BM_omega_kernel)->Arg(2)->Arg(40)->Arg(200);

BENCHMARK_MAIN();
