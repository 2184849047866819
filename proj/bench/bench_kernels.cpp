// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "cclosed/enumerate.hpp"
#include "cclosed/lemma_suite.hpp"
#include "cclosed/power.hpp"

namespace {

  using namespace cclosed;

  void enumerate_serial(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(kernels::enumerate_commutative_serial(n, UpTo::labelled));
    }
  }

  void enumerate_parallel(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(kernels::enumerate_commutative_parallel(n, UpTo::labelled));
    }
  }

  void power_serial(benchmark::State& state) {
    auto const t = tables::cyclic_group(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(kernels::power_table_serial(t));
    }
  }

  void power_parallel(benchmark::State& state) {
    auto const t = tables::cyclic_group(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(kernels::power_table_parallel(t));
    }
  }

  void suite_serial(benchmark::State& state) {
    auto const tables = enumerate_commutative(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(kernels::run_suite_serial(tables));
    }
  }

  void suite_parallel(benchmark::State& state) {
    auto const tables = enumerate_commutative(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(kernels::run_suite_parallel(tables));
    }
  }

}  // namespace

BENCHMARK(enumerate_serial)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(enumerate_parallel)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(power_serial)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(power_parallel)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(suite_serial)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(suite_parallel)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
