#include <benchmark/benchmark.h>

#include <boolcov/analytic.hpp>
#include <boolcov/geometry.hpp>

using namespace boolcov;

static void BM_CovariogramExact(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-4;
    if (t > 2.0) t = 0.0;
    benchmark::DoNotOptimize(ball_covariogram(d, t));
  }
}
BENCHMARK(BM_CovariogramExact)->Arg(2)->Arg(4)->Arg(6);

static void BM_CovariogramTable(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  const CovariogramTable& tab = covariogram_table(d);
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-4;
    if (t > 2.0) t = 0.0;
    benchmark::DoNotOptimize(tab(t));
  }
}
BENCHMARK(BM_CovariogramTable)->Arg(2)->Arg(4)->Arg(6);

static void BM_FIntegral(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f_integral(d, 0.8));
}
BENCHMARK(BM_FIntegral)->Arg(2)->Arg(4);

static void BM_GIntegral(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(g_integral(d, 0.8));
}
BENCHMARK(BM_GIntegral)->Arg(2)->Arg(4);

static void BM_SigmaMatrix2d(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sigma_matrix_2d(0.5));
}
BENCHMARK(BM_SigmaMatrix2d);

static void BM_SigmaEuler2d(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sigma_2d(0, 0, 0.5));
}
BENCHMARK(BM_SigmaEuler2d);

static void BM_FiniteWindow(benchmark::State& state) {
  auto m = ModelParams::make(2, 0.2);
  auto w = Window::cube(2, 8.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(finite_window_covariance_2d(m, w));
}
BENCHMARK(BM_FiniteWindow);

BENCHMARK_MAIN();
