#include <benchmark/benchmark.h>

#include "starpres/catalog.hpp"
#include "starpres/invariants.hpp"
#include "starpres/low_index.hpp"
#include "starpres/presentation.hpp"

using namespace starpres;

static void BM_FreeRank2(benchmark::State& state) {
  Presentation f2(2, {});
  auto max = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto tables = low_index(f2, max);
    benchmark::DoNotOptimize(tables);
  }
}
BENCHMARK(BM_FreeRank2)->Arg(3)->Arg(4)->Arg(5);

static void BM_OneRelator(benchmark::State& state) {
  Presentation p = group(1);
  auto max = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto tables = low_index(p, max);
    benchmark::DoNotOptimize(tables);
  }
}
BENCHMARK(BM_OneRelator)->Arg(3)->Arg(4)->Arg(5);

static void BM_ConjugacyClasses(benchmark::State& state) {
  Presentation p = group(3);
  for (auto _ : state) {
    auto tables = low_index(p, 5, SubgroupMode::conjugacy_classes);
    benchmark::DoNotOptimize(tables);
  }
}
BENCHMARK(BM_ConjugacyClasses);

static void BM_InvariantProfile(benchmark::State& state) {
  Presentation p = group(1);
  auto max = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto profile = invariant_profile(p, max);
    benchmark::DoNotOptimize(profile);
  }
}
BENCHMARK(BM_InvariantProfile)->Arg(3)->Arg(4)->Arg(5);
