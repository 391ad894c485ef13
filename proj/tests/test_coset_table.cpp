#include "doctest.h"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "starpres/catalog.hpp"
#include "starpres/errors.hpp"
#include "starpres/low_index.hpp"
#include "starpres/presentation.hpp"
#include "starpres/word.hpp"

using namespace starpres;

namespace {

// Marshall Hall's recursion for the number of subgroups of index exactly n
// in a free group of rank r:
//   N(1) = 1,  N(n) = n*(n!)^(r-1) - sum_{i=1}^{n-1} ((n-i)!)^(r-1) * N(i).
std::vector<std::uint64_t> hall_counts(std::uint32_t rank, std::uint32_t up_to) {
  auto factorial = [](std::uint32_t m) {
    std::uint64_t f = 1;
    for (std::uint32_t i = 2; i <= m; ++i) f *= i;
    return f;
  };
  auto fact_pow = [&](std::uint32_t m) {
    std::uint64_t f = factorial(m), v = 1;
    for (std::uint32_t i = 1; i < rank; ++i) v *= f;
    return v;
  };
  std::vector<std::uint64_t> counts(up_to + 1, 0);
  for (std::uint32_t n = 1; n <= up_to; ++n) {
    std::uint64_t v = n * fact_pow(n);
    for (std::uint32_t i = 1; i < n; ++i) v -= fact_pow(n - i) * counts[i];
    counts[n] = v;
  }
  return counts;
}

std::map<std::uint32_t, std::uint64_t> count_by_index(
    const std::vector<CosetTable>& tables) {
  std::map<std::uint32_t, std::uint64_t> by_index;
  for (const CosetTable& t : tables) ++by_index[t.index()];
  return by_index;
}

Presentation free_group(std::uint32_t rank) { return Presentation(rank, {}); }

}  // namespace

TEST_CASE("free group subgroup counts match Hall's recursion") {
  auto f2 = hall_counts(2, 5);
  CHECK(f2[1] == 1);
  CHECK(f2[2] == 3);
  CHECK(f2[3] == 13);
  CHECK(f2[4] == 71);
  CHECK(f2[5] == 461);

  auto tables = low_index(free_group(2), 5);
  auto by_index = count_by_index(tables);
  for (std::uint32_t n = 1; n <= 5; ++n) CHECK(by_index[n] == f2[n]);

  auto f3 = hall_counts(3, 4);
  CHECK(f3[2] == 7);
  CHECK(f3[3] == 97);
  CHECK(f3[4] == 2143);
  auto by_index3 = count_by_index(low_index(free_group(3), 4));
  for (std::uint32_t n = 1; n <= 4; ++n) CHECK(by_index3[n] == f3[n]);
}

TEST_CASE("finite groups with known subgroup lattices") {
  // Z_6: one subgroup per divisor of 6
  Presentation z6 = one_relator("xxxxxx", 1);
  auto z6_tables = low_index(z6, 6);
  CHECK(z6_tables.size() == 4);
  auto z6_by_index = count_by_index(z6_tables);
  CHECK(z6_by_index[1] == 1);
  CHECK(z6_by_index[2] == 1);
  CHECK(z6_by_index[3] == 1);
  CHECK(z6_by_index[6] == 1);

  // S_3 = <x, y | x^2, y^3, (xy)^2>: whole group, A_3, three C_2s, trivial
  Presentation s3(2, {Word::reduced(parse_compact("xx", 2), 2),
                      Word::reduced(parse_compact("yyy", 2), 2),
                      Word::reduced(parse_compact("xyxy", 2), 2)});
  auto s3_tables = low_index(s3, 6);
  CHECK(s3_tables.size() == 6);
  auto s3_classes = low_index(s3, 6, SubgroupMode::conjugacy_classes);
  CHECK(s3_classes.size() == 4);

  // the three order-2 subgroups form one class; everything else is normal
  std::multiset<std::uint32_t> class_sizes;
  for (const CosetTable& t : s3_classes)
    class_sizes.insert(conjugacy_class_size(t));
  CHECK(class_sizes == std::multiset<std::uint32_t>{1, 1, 1, 3});
}

TEST_CASE("every enumerated table is a valid standardized coset table") {
  Presentation p = group(1);
  auto tables = low_index(p, 4);
  for (const CosetTable& t : tables) {
    TableValidity v = validate(t, p);
    CHECK(v.complete);
    CHECK(v.inverse_consistent);
    CHECK(v.relators_close);
    CHECK(v.standardized);
    CHECK(restandardize(t, 0) == t);
    // relators fix every coset
    for (const Word& r : p.relators())
      for (std::uint32_t c = 0; c < t.index(); ++c) CHECK(t.trace(c, r) == c);
  }
}

TEST_CASE("conjugacy classes partition the subgroup list") {
  Presentation p = group(3);
  auto all = low_index(p, 5);
  auto classes = low_index(p, 5, SubgroupMode::conjugacy_classes);
  CHECK(classes.size() <= all.size());

  std::uint64_t total = 0;
  for (const CosetTable& t : classes) {
    // class representatives are exactly the tables already standardized to
    // their lexicographic minimum over basepoints
    CosetTable least = t;
    for (std::uint32_t b = 1; b < t.index(); ++b) {
      CosetTable cand = restandardize(t, b);
      if (cand < least) least = cand;
    }
    CHECK(least == t);
    total += conjugacy_class_size(t);
  }
  CHECK(total == all.size());

  // every enumerated subgroup's class representative appears in the class list
  std::set<CosetTable> class_set(classes.begin(), classes.end());
  for (const CosetTable& t : all) {
    CosetTable least = t;
    for (std::uint32_t b = 1; b < t.index(); ++b) {
      CosetTable cand = restandardize(t, b);
      if (cand < least) least = cand;
    }
    CHECK(class_set.count(least) == 1);
  }
}

TEST_CASE("search depth is bounded unless raised") {
  Presentation p = free_group(2);
  CHECK_THROWS_AS(low_index(p, 7), ResourceLimitError);
  CHECK_NOTHROW(low_index(one_relator("xx", 1), 8, SubgroupMode::all, {8}));
}

TEST_CASE("table construction rejects malformed input") {
  CHECK_THROWS_AS(CosetTable(1, {0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CosetTable(1, {0, 2, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CosetTable(0, {}), std::invalid_argument);
  CHECK_NOTHROW(CosetTable(1, {1, 1, 0, 0}));
}

TEST_CASE("tracing walks the table letter by letter") {
  // Z_3 regular representation: x sends i to i+1 mod 3
  CosetTable t(1, {1, 2, 2, 0, 0, 1});
  Word x3 = Word::reduced(parse_compact("xxx", 1), 1);
  for (std::uint32_t c = 0; c < 3; ++c) CHECK(t.trace(c, x3) == c);
  CHECK(t.trace(0, Word::reduced(parse_compact("x", 1), 1)) == 1);
  CHECK(t.trace(0, Word::reduced(parse_compact("X", 1), 1)) == 2);
}
