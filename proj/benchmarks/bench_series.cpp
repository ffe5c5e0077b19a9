#include <benchmark/benchmark.h>

#include "nekrasov/series.hpp"
#include "nekrasov/verifier.hpp"

namespace {

using namespace nekrasov;

void BM_PlaneSeries(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  const long max_n = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(series_Z_P2(rank, max_n));
}
BENCHMARK(BM_PlaneSeries)->Args({1, 4})->Args({2, 3})->Args({3, 2});

void BM_ResolutionSeries(benchmark::State& state) {
  const FrameData frame(2, 0);
  const long max4n = 4 * state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(series_Z_X1(frame, HalfInt(), max4n));
}
BENCHMARK(BM_ResolutionSeries)->Arg(2)->Arg(3);

void BM_FactorizedSeries(benchmark::State& state) {
  const FrameData frame(2, 0);
  const long max4n = 4 * state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(series_Z_X1_factorized(frame, HalfInt(), max4n));
}
BENCHMARK(BM_FactorizedSeries)->Arg(2)->Arg(3);

void BM_CheckMain(benchmark::State& state) {
  const FrameData frame(2, 0);
  SampleConfig cfg;
  const long max4n = 4 * state.range(0);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(check_main(frame, HalfInt::from_int(1), max4n, cfg, threads));
}
BENCHMARK(BM_CheckMain)->Args({2, 1})->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_Evaluate(benchmark::State& state) {
  const QSeries z = series_Z_X1(FrameData(2, 0), HalfInt(), 12);
  SampleConfig cfg;
  const EvalPoint p = sample_point(cfg, 0, 2, z.pole_forms()).point;
  for (auto _ : state) benchmark::DoNotOptimize(z.evaluate(12, p));
}
BENCHMARK(BM_Evaluate);

}  // namespace
BENCHMARK_MAIN();
