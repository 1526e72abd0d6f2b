#include <benchmark/benchmark.h>

#include "trineq/inequalities.hpp"
#include "trineq/sampling.hpp"
#include "trineq/search.hpp"
#include "trineq/suite.hpp"

namespace {

using namespace trineq;

void BM_EigHermitian(benchmark::State& state) {
  SplitMix64 rng(1);
  const HermMatrix m = random_observable(state.range(0), 1.0, rng).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(m));
}
BENCHMARK(BM_EigHermitian)->DenseRange(2, 6, 2)->Arg(16);

void BM_FracPower(benchmark::State& state) {
  SplitMix64 rng(2);
  const HermMatrix m = random_pd(state.range(0), 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(frac_power(m, 0.3));
}
BENCHMARK(BM_FracPower)->DenseRange(2, 6, 2);

void BM_GapProp22(benchmark::State& state) {
  SplitMix64 rng(3);
  const HermMatrix x = random_pd(state.range(0), 1.0, rng);
  const HermMatrix y = random_pd(state.range(0), 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(gap_prop22(x, y, Deformation(0.5)));
}
BENCHMARK(BM_GapProp22)->Arg(2)->Arg(4);

void BM_SuiteSmall(benchmark::State& state) {
  RunConfig cfg;
  cfg.samples = 10;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg));
}
BENCHMARK(BM_SuiteSmall)->Unit(benchmark::kMillisecond);

void BM_SearchCmpUpper(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        minimize_gap(InequalityId::cmp_upper_bounds, {2, SampleKind::pd, 1.0, 7}, 2000));
  }
}
BENCHMARK(BM_SearchCmpUpper)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
