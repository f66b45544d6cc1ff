#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "dilbasis/dirichlet.hpp"
#include "dilbasis/profiles.hpp"
#include "dilbasis/ptrig.hpp"
#include "dilbasis/thresholds.hpp"
#include "dilbasis/torusmin.hpp"

using namespace dilbasis;

static void BM_FpSeries(benchmark::State& state) {
  const PTrigContext ctx{PExponent(1.05)};
  double y = 0.0;
  for (auto _ : state) {
    y += 1e-6;
    if (y >= 1.0) y = 0.0;
    benchmark::DoNotOptimize(ctx.F(y));
  }
}
BENCHMARK(BM_FpSeries);

static void BM_SinPInverse(benchmark::State& state) {
  const PTrigContext ctx{PExponent(1.5)};
  const double quarter = 0.5 * ctx.pi_p();
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-4;
    if (x >= quarter) x = 0.0;
    benchmark::DoNotOptimize(ctx.sin(x));
  }
}
BENCHMARK(BM_SinPInverse);

// coefficient table up to jmax, the cost behind every p-sine threshold step
static void BM_PSineTable(benchmark::State& state) {
  const int jmax = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psine_coefficients(1.04, jmax).values.data());
  state.SetComplexityN(jmax);
}
BENCHMARK(BM_PSineTable)->Arg(63)->Arg(251)->Arg(1001)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_TorusMin(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::vector<std::int64_t> support{1, 3};
  if (d >= 2) support.push_back(5);
  if (d >= 3) support.push_back(7);
  std::vector<std::complex<double>> coeffs;
  for (std::size_t i = 0; i < support.size(); ++i) coeffs.emplace_back(1.0 / (1.0 + i), 0.1 * i);
  const DirichletPolynomial poly(SupportSet(support), coeffs);
  for (auto _ : state) benchmark::DoNotOptimize(min_modulus(poly).mu);
}
BENCHMARK(BM_TorusMin)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_ThresholdAlpha5(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve(make_recipe("alpha5")).value);
}
BENCHMARK(BM_ThresholdAlpha5)->Unit(benchmark::kMillisecond)->Iterations(3);

BENCHMARK_MAIN();
