#include <benchmark/benchmark.h>

#include "starpres/enumerate.hpp"

using namespace starpres;

static void BM_CandidateStream(benchmark::State& state) {
  for (auto _ : state) {
    auto words = candidates({});
    benchmark::DoNotOptimize(words);
  }
}
BENCHMARK(BM_CandidateStream);

static void BM_FilterExact(benchmark::State& state) {
  auto words = candidates({});
  for (auto _ : state) {
    auto selected = filter_special(words, FilterMode::exact);
    benchmark::DoNotOptimize(selected);
  }
}
BENCHMARK(BM_FilterExact);

static void BM_FilterProxy(benchmark::State& state) {
  auto words = candidates({});
  for (auto _ : state) {
    auto selected = filter_special(words, FilterMode::proxy);
    benchmark::DoNotOptimize(selected);
  }
}
BENCHMARK(BM_FilterProxy);

static void BM_EndToEnd(benchmark::State& state) {
  for (auto _ : state) {
    EnumerationReport report;
    auto words = k33_relators(&report);
    benchmark::DoNotOptimize(words);
  }
}
BENCHMARK(BM_EndToEnd);

BENCHMARK_MAIN();
