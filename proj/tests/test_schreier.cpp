#include "doctest.h"

#include <cstdint>

#include "starpres/abelian.hpp"
#include "starpres/catalog.hpp"
#include "starpres/low_index.hpp"
#include "starpres/presentation.hpp"
#include "starpres/schreier.hpp"
#include "starpres/word.hpp"

using namespace starpres;

namespace {

CosetTable index_one(std::uint32_t rank) {
  std::vector<std::uint32_t> entries(2 * rank, 0);
  return CosetTable(rank, entries);
}

}  // namespace

TEST_CASE("index-one rewriting returns the group itself") {
  Presentation p = group(1);
  SubgroupPresentation s = schreier_presentation(p, index_one(3));
  CHECK(s.generator_count == 3);
  REQUIRE(s.relators.size() == 1);
  // generator numbering follows scan order, so the relator is spelled the same
  CHECK(s.relators[0].letters() == p.relators()[0].letters());
}

TEST_CASE("subgroups of free groups are free of the right rank") {
  // Nielsen-Schreier: index k in F_n gives rank k(n-1)+1, and rewriting a
  // presentation with no relators yields none
  for (std::uint32_t n = 1; n <= 3; ++n) {
    Presentation f(n, {});
    for (std::uint32_t k = 1; k <= 3; ++k) {
      for (const CosetTable& t : low_index(f, k)) {
        if (t.index() != k) continue;
        SubgroupPresentation s = schreier_presentation(f, t);
        CHECK(s.generator_count == k * (n - 1) + 1);
        CHECK(s.relators.empty());
      }
    }
  }
}

TEST_CASE("generator and relator counts for one-relator subgroups") {
  Presentation p = group(1);
  for (const CosetTable& t : low_index(p, 3)) {
    SubgroupPresentation s = schreier_presentation(p, t);
    std::uint32_t k = t.index();
    CHECK(s.generator_count == k * 2 + 1);
    CHECK(s.relators.size() == k);  // one rewritten relator per coset
  }
}

TEST_CASE("rewritten relators die in the subgroup's abelianization") {
  // sanity: the rewritten presentation must present the same subgroup, so at
  // index 1 the abelianization matches the ambient group's
  for (std::uint32_t g : {1u, 3u, 7u}) {
    Presentation p = group(g);
    AbelianGroup direct = abelianization(p);
    AbelianGroup rewritten = abelianization(schreier_presentation(p, index_one(3)));
    CHECK(direct == rewritten);
  }
}

TEST_CASE("abelianized subgroup invariants of a known example") {
  // Z = <x | > inside itself at index k: the subgroup is kZ, still Z
  Presentation z(1, {});
  for (const CosetTable& t : low_index(z, 4)) {
    AbelianGroup a = abelianization(schreier_presentation(z, t));
    CHECK(a.rank == 1);
    CHECK(a.torsion.empty());
  }

  // Z_6 at index 2 gives Z_3, at index 3 gives Z_2, at index 6 the trivial group
  Presentation z6 = one_relator("xxxxxx", 1);
  for (const CosetTable& t : low_index(z6, 6)) {
    AbelianGroup a = abelianization(schreier_presentation(z6, t));
    CHECK(a.rank == 0);
    switch (t.index()) {
      case 1:
        REQUIRE(a.torsion.size() == 1);
        CHECK(a.torsion[0] == 6);
        break;
      case 2:
        REQUIRE(a.torsion.size() == 1);
        CHECK(a.torsion[0] == 3);
        break;
      case 3:
        REQUIRE(a.torsion.size() == 1);
        CHECK(a.torsion[0] == 2);
        break;
      case 6:
        CHECK(a.torsion.empty());
        break;
      default:
        FAIL("unexpected index");
    }
  }
}
