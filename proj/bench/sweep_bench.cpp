#include <benchmark/benchmark.h>

#include "popstack/lab.hpp"

using namespace popstack;

static void BM_TheoremSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::verify_theorem(n));
}
BENCHMARK(BM_TheoremSerial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_TheoremParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(n, default_jobs()));
}
BENCHMARK(BM_TheoremParallel)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_HistogramSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::pass_histogram(n, Machine::popstack));
}
BENCHMARK(BM_HistogramSerial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_HistogramParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pass_histogram(n, Machine::popstack, default_jobs()));
  }
}
BENCHMARK(BM_HistogramParallel)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_WorstTumbleSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::verify_worst_tumble(12));
}
BENCHMARK(BM_WorstTumbleSerial)->Unit(benchmark::kMillisecond);

static void BM_WorstTumbleParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_worst_tumble(12, default_jobs()));
}
BENCHMARK(BM_WorstTumbleParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
