// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "filicheck/catalog.hpp"
#include "filicheck/complex_structures.hpp"
#include "filicheck/complexify.hpp"
#include "filicheck/nilpotent.hpp"
#include "filicheck/numeric_search.hpp"

using namespace filicheck;

namespace {

NumericSearchOptions restart_opts() {
  NumericSearchOptions o;
  o.restarts = 8;
  return o;
}

void BM_RestartsSerial(benchmark::State& state) {
  const LieAlgebra alg = builtin_algebra("L6");
  for (auto _ : state) benchmark::DoNotOptimize(run_restarts_serial(alg, restart_opts()));
}

void BM_RestartsParallel(benchmark::State& state) {
  const LieAlgebra alg = builtin_algebra("L6");
  for (auto _ : state) benchmark::DoNotOptimize(run_restarts(alg, restart_opts()));
}

void BM_SplitScanSerial(benchmark::State& state) {
  const LieAlgebra alg = complexify(model_filiform(6));
  for (auto _ : state) benchmark::DoNotOptimize(scan_filiform_splits_serial(alg, 50, kDefaultSeed));
}

void BM_SplitScanParallel(benchmark::State& state) {
  const LieAlgebra alg = complexify(model_filiform(6));
  for (auto _ : state) benchmark::DoNotOptimize(scan_filiform_splits(alg, 50, kDefaultSeed));
}

void BM_CharSequenceSerial(benchmark::State& state) {
  const LieAlgebra alg = builtin_algebra("L8");
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_sequence_serial(alg));
}

void BM_CharSequenceParallel(benchmark::State& state) {
  const LieAlgebra alg = builtin_algebra("L8");
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_sequence(alg));
}

}  // namespace

BENCHMARK(BM_RestartsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RestartsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SplitScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SplitScanParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharSequenceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharSequenceParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
