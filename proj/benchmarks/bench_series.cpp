#include <benchmark/benchmark.h>

#include "itlog/expr.hpp"
#include "itlog/funceq.hpp"
#include "itlog/series.hpp"

using namespace itlog;

static RSeries expm1_series(int order) {
  return eval_series(parse_expression("expm1"), order, {});
}

static void BM_SeriesMul(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  RSeries a = expm1_series(n);
  RSeries b = exp_series(RSeries::monomial(2, Rat(1), n));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Arg(32)->Arg(64)->Arg(128);

static void BM_SeriesCompose(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  RSeries a = expm1_series(n);
  RSeries b = expm1_series(n);
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_SeriesCompose)->Arg(16)->Arg(32)->Arg(64);

static void BM_Itlog(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ParabolicGerm f(expm1_series(n + 1));
  for (auto _ : state) benchmark::DoNotOptimize(itlog_solve(f, n));
}
BENCHMARK(BM_Itlog)->Arg(20)->Arg(40)->Arg(80);

BENCHMARK_MAIN();
