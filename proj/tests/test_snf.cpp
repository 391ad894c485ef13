#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "starpres/snf.hpp"

using namespace starpres;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::vector<BigInt> diagonal(const IntMatrix& m) {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    d.push_back(m.at(i, i));
  return d;
}

void check_decomposition(const IntMatrix& a) {
  SmithDecomposition d = smith_normal_form(a);
  CHECK(d.u.rows() == a.rows());
  CHECK(d.u.cols() == a.rows());
  CHECK(d.v.rows() == a.cols());
  CHECK(d.v.cols() == a.cols());
  CHECK(d.u.multiply(a).multiply(d.v) == d.s);

  // unimodular transforms
  BigInt du = d.u.determinant(), dv = d.v.determinant();
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));

  // diagonal, nonnegative, divisibility chain
  for (std::size_t i = 0; i < d.s.rows(); ++i)
    for (std::size_t j = 0; j < d.s.cols(); ++j)
      if (i != j) CHECK(d.s.at(i, j) == 0);
  auto diag = diagonal(d.s);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (i + 1 < diag.size()) {
      if (diag[i] == 0) CHECK(diag[i + 1] == 0);
      else CHECK(diag[i + 1] % diag[i] == 0);
    }
  }
}

// Independent characterization: the product of the first t diagonal entries
// equals the gcd of all t x t minors.
BigInt minor_gcd(const IntMatrix& a, std::size_t t) {
  BigInt g = 0;

  // iterate over all t-subsets of rows and columns
  std::vector<std::size_t> rsub(t);
  std::iota(rsub.begin(), rsub.end(), 0);
  auto next_subset = [](std::vector<std::size_t>& s, std::size_t n) {
    std::size_t t2 = s.size();
    for (std::size_t i = t2; i-- > 0;) {
      if (s[i] + (t2 - i) <= n) {
        ++s[i];
        for (std::size_t j = i + 1; j < t2; ++j) s[j] = s[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  do {
    std::vector<std::size_t> csub(t);
    std::iota(csub.begin(), csub.end(), 0);
    do {
      IntMatrix sub(t, t);
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
          sub.at(i, j) = a.at(rsub[i], csub[j]);
      g = boost::multiprecision::gcd(g, sub.determinant());
    } while (next_subset(csub, a.cols() - 1));
  } while (next_subset(rsub, a.rows() - 1));
  return g < 0 ? BigInt(-g) : g;
}

}  // namespace

TEST_CASE("hand-checked normal forms") {
  {
    // entry gcd 2, |det| 8, so invariants 2 and 4
    auto d = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
    CHECK(diagonal(d.s) == std::vector<BigInt>{2, 4});
  }
  {
    auto d = smith_normal_form(from_rows({{3, 3, 3}}));
    CHECK(diagonal(d.s) == std::vector<BigInt>{3});
  }
  {
    // Z^2 / <(2,0),(0,3)> = Z_6 after chaining
    auto d = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    CHECK(diagonal(d.s) == std::vector<BigInt>{1, 6});
  }
  {
    auto d = smith_normal_form(from_rows({{0, 0}, {0, 0}}));
    CHECK(diagonal(d.s) == std::vector<BigInt>{0, 0});
  }
  {
    // negative entries normalize to nonnegative invariants
    auto d = smith_normal_form(from_rows({{-4}}));
    CHECK(diagonal(d.s) == std::vector<BigInt>{4});
  }
  {
    // rank-deficient wide matrix
    auto d = smith_normal_form(from_rows({{1, 2, 3}, {2, 4, 6}}));
    CHECK(diagonal(d.s) == std::vector<BigInt>{1, 0});
  }
}

TEST_CASE("determinant is exact and sign-aware") {
  CHECK(from_rows({{2, 4}, {6, 8}}).determinant() == -8);
  CHECK(from_rows({{0, 1}, {1, 0}}).determinant() == -1);
  CHECK(IntMatrix::identity(5).determinant() == 1);
  IntMatrix empty(0, 0);
  CHECK(empty.determinant() == 1);

  // 20x20 Hilbert-like integer matrix stays exact far beyond int64
  IntMatrix big(20, 20);
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = 0; j < 20; ++j)
      big.at(i, j) = BigInt(1) + BigInt(i) * BigInt(j);
  CHECK(big.determinant() == 0);  // rank 2 structure
}

TEST_CASE("randomized decomposition properties") {
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = val(rng);
    check_decomposition(a);
  }
}

TEST_CASE("diagonal matches the gcd of minors") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> dim(1, 4), val(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = val(rng);
    SmithDecomposition d = smith_normal_form(a);
    auto diag = diagonal(d.s);
    BigInt partial = 1;
    for (std::size_t t = 1; t <= diag.size(); ++t) {
      partial *= diag[t - 1];
      CHECK(partial == minor_gcd(a, t));
    }
  }
}
