#include <benchmark/benchmark.h>

#include "pentaform/enumerate.hpp"
#include "pentaform/kernels.hpp"
#include "pentaform/universality.hpp"

using namespace pentaform;

namespace {

const TernaryForm& exact_q() {
  static const TernaryForm f = exact_q_form();
  return f;
}

void BM_SieveSerial(benchmark::State& state) {
  const ShortVectorSearch s(exact_q());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sieve_serial(s, state.range(0)));
}

void BM_SieveParallel(benchmark::State& state) {
  const ShortVectorSearch s(exact_q());
  kernels::set_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sieve_parallel(s, state.range(0)));
}

void BM_OracleSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::polygonal_gaps_serial(5, 1, 1, 7, state.range(0)));
}

void BM_OracleParallel(benchmark::State& state) {
  kernels::set_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::polygonal_gaps_parallel(5, 1, 1, 7, state.range(0)));
}

void BM_PipelineRange(benchmark::State& state) {
  kernels::set_threads(static_cast<int>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_quadruple(Quadruple(5, 1, 3, 7), state.range(0), VerifyMode::Constructive));
}

}  // namespace

BENCHMARK(BM_SieveSerial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SieveParallel)->ArgsProduct({{100000, 1000000}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->ArgsProduct({{100000, 1000000}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PipelineRange)->ArgsProduct({{10000}, {1, 2}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
