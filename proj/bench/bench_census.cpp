#include <benchmark/benchmark.h>

#include "wcde/cde.hpp"
#include "wcde/parallel.hpp"
#include "wcde/rook.hpp"

using namespace wcde;

static void BM_census_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(census_serial(static_cast<int>(st.range(0))));
}
static void BM_census_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(census(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_census_serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_census_parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_theorem_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_main_theorem_serial(static_cast<int>(st.range(0))));
}
static void BM_theorem_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_main_theorem(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_theorem_serial)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_theorem_parallel)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_rooks_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_perm_rooks_serial(static_cast<int>(st.range(0))));
}
static void BM_rooks_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_perm_rooks(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_rooks_serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rooks_parallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  set_threads(0);
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
