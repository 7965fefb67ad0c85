// Serial reference vs OpenMP kernels over the bundled curve corpus.
#include <benchmark/benchmark.h>

#include "tamagawa/database.hpp"
#include "tamagawa/verify.hpp"
#include "tamagawa/visibility.hpp"

namespace {

const tamagawa::DatabaseFile& corpus() {
  static const auto db = tamagawa::parse_curve_db(TAMAGAWA_CORPUS);
  return db;
}

void BM_VerifySerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tamagawa::run_verification_suite_serial(corpus()));
}

void BM_VerifyParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tamagawa::run_verification_suite(corpus()));
}

void BM_ScanSerial(benchmark::State& state) {
  const auto p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(tamagawa::scan_congruent_pairs_serial(corpus().records, p, 1000));
}

void BM_ScanParallel(benchmark::State& state) {
  const auto p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(tamagawa::scan_congruent_pairs(corpus().records, p, 1000));
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
