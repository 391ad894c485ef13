#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "starpres/abelian.hpp"
#include "starpres/catalog.hpp"
#include "starpres/low_index.hpp"
#include "starpres/schreier.hpp"
#include "starpres/snf.hpp"

using namespace starpres;

static std::vector<IntMatrix> random_matrices(std::size_t dim, int count) {
  std::mt19937 rng(1234 + dim);
  std::uniform_int_distribution<int> val(-9, 9);
  std::vector<IntMatrix> out;
  for (int t = 0; t < count; ++t) {
    IntMatrix a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) a.at(i, j) = val(rng);
    out.push_back(a);
  }
  return out;
}

static void BM_SmithNormalForm(benchmark::State& state) {
  auto mats = random_matrices(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t next = 0;
  for (auto _ : state) {
    auto d = smith_normal_form(mats[next]);
    benchmark::DoNotOptimize(d);
    next = (next + 1) % mats.size();
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12);

static void BM_Determinant(benchmark::State& state) {
  auto mats = random_matrices(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t next = 0;
  for (auto _ : state) {
    BigInt det = mats[next].determinant();
    benchmark::DoNotOptimize(det);
    next = (next + 1) % mats.size();
  }
}
BENCHMARK(BM_Determinant)->Arg(6)->Arg(12);

static void BM_SubgroupAbelianization(benchmark::State& state) {
  Presentation p = group(1);
  auto tables = low_index(p, 4);
  for (auto _ : state) {
    for (const CosetTable& t : tables) {
      AbelianGroup a = abelianization(schreier_presentation(p, t));
      benchmark::DoNotOptimize(a);
    }
  }
}
BENCHMARK(BM_SubgroupAbelianization);
