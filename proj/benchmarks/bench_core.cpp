#include <benchmark/benchmark.h>

#include "cqm/specfun.hpp"
#include "cqm/suite.hpp"

using namespace cqm;

static void BM_Laguerre(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(laguerre(n, 2.5, x));
    x += 1e-9;
  }
}
BENCHMARK(BM_Laguerre)->Arg(2)->Arg(8)->Arg(32);

static void BM_SphericalHarmonic(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spherical_harmonic(l, l / 2, 0.9, 0.4));
}
BENCHMARK(BM_SphericalHarmonic)->Arg(1)->Arg(4)->Arg(8);

static void BM_EvaluateHydrogen(benchmark::State& state) {
  const auto s = hydrogen_state(derive_scales(atomic_units(), System::kHydrogen), {3, 2, 1});
  const Vec3 x{1.2, -0.4, 2.2};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(s, x, 0.3));
}
BENCHMARK(BM_EvaluateHydrogen);

static void BM_MixedDerivative(benchmark::State& state) {
  const auto s = hydrogen_state(derive_scales(atomic_units(), System::kHydrogen), {2, 1, 0});
  const auto f = make_field(s);
  const auto p = MapParams::for_state(s);
  const Vec3 x{0.7, 0.9, -1.3};
  for (auto _ : state) benchmark::DoNotOptimize(dzdz_analytic(f, x, 0.0, p));
}
BENCHMARK(BM_MixedDerivative);

static void BM_DefaultSuite(benchmark::State& state) {
  const auto cfg = SuiteConfig::defaults();
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg));
}
BENCHMARK(BM_DefaultSuite)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
