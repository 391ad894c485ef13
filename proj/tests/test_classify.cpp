#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "doctest.h"

#include "starpres/catalog.hpp"
#include "starpres/classify.hpp"
#include "starpres/word.hpp"

using namespace starpres;

namespace {

Word w3(std::string_view s) { return Word::reduced(parse_compact(s, 3), 3); }

std::vector<Word> published_words() {
  std::vector<Word> out;
  for (const std::string& s : published_k33_words()) out.push_back(w3(s));
  return out;
}

}  // namespace

TEST_CASE("the symmetry group has 48 elements") {
  const auto& sym = symmetry_group();
  CHECK(sym.size() == 48);
  std::set<SignedPermutation> distinct(sym.begin(), sym.end());
  CHECK(distinct.size() == 48);
  // closed under composition
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      CHECK(distinct.count(sym[i * 5].then(sym[j * 6 % 48])));
}

TEST_CASE("orbits are closed under the defining moves") {
  Word w = w3("xxyyzzxzy");
  std::set<Word> orb = orbit(w);
  CHECK(orb.count(w));
  for (const Word& u : orb) {
    CHECK(orb.count(invert(u)));
    CHECK(orb.count(rotated(u, 1)));
    for (const SignedPermutation& s : symmetry_group())
      CHECK(orb.count(apply(s, u)));
  }
}

TEST_CASE("witness formatting") {
  CHECK(witness_to_string({}) == "identity");
  Witness wit = {WitnessStep::permutation(WitnessStep::Perm::phi_x),
                 WitnessStep::permutation(WitnessStep::Perm::rho_z),
                 WitnessStep::inversion(), WitnessStep::rotation(5)};
  CHECK(witness_to_string(wit) == "phi_x.rho_z;inv;rot 5");
}

TEST_CASE("witness replay matches step-by-step application") {
  Word w = w3("xxyzzyyxz");
  Witness wit = {WitnessStep::permutation(WitnessStep::Perm::rho_x),
                 WitnessStep::permutation(WitnessStep::Perm::rho_y),
                 WitnessStep::permutation(WitnessStep::Perm::rho_z),
                 WitnessStep::inversion(),
                 WitnessStep::permutation(WitnessStep::Perm::phi_x),
                 WitnessStep::rotation(7)};
  Word step = w;
  step = apply(named_permutation(WitnessStep::Perm::rho_x), step);
  step = apply(named_permutation(WitnessStep::Perm::rho_y), step);
  step = apply(named_permutation(WitnessStep::Perm::rho_z), step);
  step = invert(step);
  step = apply(named_permutation(WitnessStep::Perm::phi_x), step);
  step = rotated(step, 7);
  CHECK(replay(wit, w) == step);
}

TEST_CASE("find_witness connects orbit members") {
  Word a = w3("xxyyzzxzy");
  SUBCASE("identity") {
    auto wit = find_witness(a, a);
    REQUIRE(wit.has_value());
    CHECK(wit->empty());
  }
  SUBCASE("single rotation") {
    auto wit = find_witness(rotated(a, 3), a);
    REQUIRE(wit.has_value());
    CHECK(replay(*wit, rotated(a, 3)) == a);
  }
  SUBCASE("across the orbit") {
    for (const Word& u : {rotated(invert(a), 2),
                          apply(named_permutation(WitnessStep::Perm::phi_y), a),
                          rotated(apply(fix_and_swap(0), invert(a)), 5)}) {
      auto wit = find_witness(u, a);
      REQUIRE(wit.has_value());
      CHECK(replay(*wit, u) == a);
    }
  }
  SUBCASE("different classes are not connected") {
    CHECK(!find_witness(w3("xxyxzyyzz"), w3("xxyxzzyyz")).has_value());
  }
}

TEST_CASE("the published words fall into the twelve catalog classes") {
  std::vector<EquivalenceClass> classes = partition(published_words());
  REQUIRE(classes.size() == 12);

  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.members.size());
  CHECK(sizes == std::vector<std::size_t>{6, 6, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2});

  // membership sets agree with the catalog, class by class
  std::map<std::set<std::string>, std::uint32_t> catalog_members;
  for (const RelatorClass& rc : relator_classes()) {
    std::set<std::string> m(rc.members.begin(), rc.members.end());
    catalog_members[m] = rc.number;
  }
  REQUIRE(catalog_members.size() == 12);
  std::set<std::uint32_t> hit;
  for (const EquivalenceClass& c : classes) {
    std::set<std::string> m;
    for (const Word& u : c.members) m.insert(format_compact(u));
    auto it = catalog_members.find(m);
    REQUIRE(it != catalog_members.end());
    hit.insert(it->second);
  }
  CHECK(hit.size() == 12);

  // every witness replays onto the class representative
  for (const EquivalenceClass& c : classes)
    for (const Word& u : c.members)
      CHECK(replay(c.witnesses.at(u), u) == c.representative);
}

TEST_CASE("catalog data is internally consistent") {
  const auto& classes = relator_classes();
  REQUIRE(classes.size() == 12);
  std::set<std::string> all;
  for (const RelatorClass& rc : classes) {
    CHECK(rc.number >= 1);
    CHECK(rc.number <= 12);
    // members keep their published order, so the representative appears
    // somewhere in the list rather than necessarily first
    CHECK(std::find(rc.members.begin(), rc.members.end(),
                    rc.representative) != rc.members.end());
    // exponent spelling matches the compact one
    CHECK(Word::reduced(parse_exponent(rc.representative_factors, 3), 3) ==
          w3(rc.representative));
    for (const std::string& m : rc.members) CHECK(all.insert(m).second);
    // members really are equivalent: same orbit
    std::set<Word> orb = orbit(w3(rc.representative));
    for (const std::string& m : rc.members) CHECK(orb.count(w3(m)));
  }
  CHECK(all.size() == 32);
  CHECK(all == std::set<std::string>(published_k33_words().begin(),
                                     published_k33_words().end()));
}

TEST_CASE("identification table rows replay") {
  const auto& rows = identification_rows();
  REQUIRE(rows.size() == 31);

  unsigned identity_rows = 0, inversion_appended = 0;
  std::set<std::string> flagged;
  for (const IdentificationRow& row : rows) {
    RowReplay rep = verify_identification_row(row);
    CHECK(rep.ok);
    identity_rows += row.identity;
    if (rep.inversion_appended) {
      ++inversion_appended;
      flagged.insert(row.word);
    }
  }
  CHECK(identity_rows == 12);
  // exactly the three rows whose printed compositions land on the inverse
  CHECK(inversion_appended == 3);
  CHECK(flagged == std::set<std::string>{"xxyyzzyxz", "xxyzyyxzz", "xxyyzxzzy"});
}

TEST_CASE("group registry") {
  CHECK(group_name(1) == "G1");
  CHECK(group_name(12) == "G12");
  for (std::uint32_t i = 1; i <= 12; ++i) {
    Presentation p = group(i);
    CHECK(p.rank() == 3);
    REQUIRE(p.relators().size() == 1);
    CHECK(format_compact(p.relators()[0]) == relator_classes()[i - 1].representative);
  }
  CHECK_THROWS(group(0));
  CHECK_THROWS(group(13));
}
