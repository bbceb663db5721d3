#include <benchmark/benchmark.h>

#include "extline/ext_poincare.hpp"
#include "extline/gamma.hpp"
#include "extline/quiver_modules.hpp"
#include "extline/yoneda.hpp"

using namespace extline;

static void BM_ExtTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ext_table(n, 4 * n));
}
BENCHMARK(BM_ExtTable)->DenseRange(2, 8, 2);

static void BM_SyzygyIteration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LineAlgebra alg(n, FieldSpec(2));
  for (auto _ : state) benchmark::DoNotOptimize(syzygy_power(alg, simple_module(alg, 1), 2 * n));
}
BENCHMARK(BM_SyzygyIteration)->DenseRange(2, 8, 2);

static void BM_VerifyResolution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LineAlgebra alg(n, FieldSpec(0));
  const PeriodicComplex r = build_resolution(alg, 1, 4 * n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_resolution(alg, r, 4 * n));
}
BENCHMARK(BM_VerifyResolution)->DenseRange(2, 5);

static void BM_NullHomotopy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LineAlgebra alg(n, FieldSpec(0));
  const ResolutionSet rs(alg);
  const ChainMap f = compose(alg, generator_xstar(rs, 1), generator_x(rs, 1));
  for (auto _ : state) benchmark::DoNotOptimize(null_homotopy(alg, f));
}
BENCHMARK(BM_NullHomotopy)->DenseRange(2, 6);

static void BM_GradedDimension(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RelatorSet rels{QuiverQ(n)};
  for (auto _ : state) benchmark::DoNotOptimize(graded_dimension(rels, 4 * n));
}
BENCHMARK(BM_GradedDimension)->DenseRange(2, 8, 2);

static void BM_MainTheorem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LineAlgebra alg(n, FieldSpec(2));
  const ResolutionSet rs(alg);
  for (auto _ : state) benchmark::DoNotOptimize(verify_main_theorem(rs, 2 * n + 2));
}
BENCHMARK(BM_MainTheorem)->DenseRange(2, 5);
BENCHMARK_MAIN();
