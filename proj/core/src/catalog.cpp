#include "starpres/catalog.hpp"

#include <stdexcept>

namespace starpres {

namespace {

using P = WitnessStep::Perm;

Witness perms(std::initializer_list<P> ps) {
  Witness w;
  for (P p : ps) w.push_back(WitnessStep::permutation(p));
  return w;
}

Witness operator+(Witness a, const Witness& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const Witness kInv{WitnessStep::inversion()};

}  // namespace

const std::vector<RelatorClass>& relator_classes() {
  static const std::vector<RelatorClass> classes{
      {1,
       "xxyyzzxzy",
       "x^2 y^2 z^2 x z y",
       {"xxyxzyyzz", "xxyzxzzyy", "xxyyxzyzz", "xxyyzyxzz", "xxyyzzyxz",
        "xxyyzzxzy"}},
      {2,
       "xxyxzzyyz",
       "x^2 y x z^2 y^2 z",
       {"xxyzyyxzz", "xxyzzxzyy", "xxyzzyyxz", "xxyyxzzyz", "xxyyzxzzy",
        "xxyxzzyyz"}},
      {3,
       "xxyXzyZyz",
       "x^2 y x^-1 z y z^-1 y z",
       {"xxyXzyZyz", "xxyzYzyXz"}},
      {4,
       "xxyXzyZYz",
       "x^2 y x^-1 z y z^-1 y^-1 z",
       {"xxyXzyZYz", "xxyZYzyXz"}},
      {5,
       "xxyXzYzyz",
       "x^2 y x^-1 z y^-1 z y z",
       {"xxyXzYzyz", "xxyzyZyXz"}},
      {6,
       "xxyXzYZyz",
       "x^2 y x^-1 z y^-1 z^-1 y z",
       {"xxyXzYZyz", "xxyzYZyXz"}},
      {7,
       "xxyZxYzyz",
       "x^2 y z^-1 x y^-1 z y z",
       {"xxyZxYzyz", "xxyzyZxYz"}},
      {8,
       "xxyZyzyXz",
       "x^2 y z^-1 y z y x^-1 z",
       {"xxyZyzyXz", "xxyXzyzYz"}},
      {9,
       "xxyZyXzyz",
       "x^2 y z^-1 y x^-1 z y z",
       {"xxyZyXzyz", "xxyzyXzYz"}},
      {10,
       "xxYzxyzyZ",
       "x^2 y^-1 z x y z y z^-1",
       {"xxYzxyzyZ", "xxYzyzxyZ"}},
      {11,
       "xxYzyZxyz",
       "x^2 y^-1 z y z^-1 x y z",
       {"xxYzyZxyz", "xxyzxYzyZ"}},
      {12,
       "xxYXzyZyz",
       "x^2 y^-1 x^-1 z y z^-1 y z",
       {"xxYXzyZyz", "xxyzYzyXZ"}},
  };
  return classes;
}

const std::vector<std::string>& published_k33_words() {
  static const std::vector<std::string> words{
      "xxyxzyyzz", "xxyxzzyyz", "xxyyxzyzz", "xxyyxzzyz", "xxyyzxzzy",
      "xxyyzyxzz", "xxyyzzxzy", "xxyyzzyxz", "xxyzxzzyy", "xxyzxYzyZ",
      "xxyzyyxzz", "xxyzyXzYz", "xxyzyZxYz", "xxyzyZyXz", "xxyzzxzyy",
      "xxyzzyyxz", "xxyzYzyXz", "xxyzYzyXZ", "xxyzYZyXz", "xxyXzyzYz",
      "xxyXzyZyz", "xxyXzyZYz", "xxyXzYzyz", "xxyXzYZyz", "xxyZxYzyz",
      "xxyZyzyXz", "xxyZyXzyz", "xxyZYzyXz", "xxYzxyzyZ", "xxYzyzxyZ",
      "xxYzyZxyz", "xxYXzyZyz"};
  return words;
}

Presentation group(std::uint32_t i) {
  if (i < 1 || i > 12) throw std::invalid_argument("group: index in 1..12");
  return one_relator(relator_classes()[i - 1].representative);
}

std::string group_name(std::uint32_t i) { return "G" + std::to_string(i); }

const std::vector<IdentificationRow>& identification_rows() {
  static const std::vector<IdentificationRow> rows = [] {
    std::vector<IdentificationRow> out;
    auto identity = [&](std::uint32_t cls, const std::string& w) {
      out.push_back({cls, w, {}, true});
    };
    auto row = [&](std::uint32_t cls, const std::string& w, Witness steps) {
      out.push_back({cls, w, std::move(steps), false});
    };

    identity(1, "xxyyzzxzy");
    row(1, "xxyxzyyzz", perms({P::phi_x, P::phi_y}));
    row(1, "xxyyxzyzz",
        perms({P::rho_x, P::rho_y, P::rho_z}) + kInv + perms({P::phi_z}));
    row(1, "xxyyzyxzz", perms({P::phi_x, P::phi_z}));
    row(1, "xxyyzzyxz", perms({P::phi_y, P::rho_x, P::rho_y, P::rho_z}));

    identity(2, "xxyxzzyyz");
    row(2, "xxyzyyxzz",
        perms({P::phi_x, P::phi_y, P::rho_x, P::rho_y, P::rho_z}));
    row(2, "xxyzzxzyy", perms({P::phi_x, P::phi_z}));
    row(2, "xxyzzyyxz",
        perms({P::rho_x, P::rho_y, P::rho_z}) + kInv + perms({P::phi_x}));
    row(2, "xxyyxzzyz", perms({P::phi_y}));
    row(2, "xxyyzxzzy",
        perms({P::phi_x, P::phi_z, P::rho_x, P::rho_y, P::rho_z}));

    const Witness second_member_steps =
        perms({P::phi_x, P::rho_z, P::rho_y, P::rho_x}) + kInv;
    for (std::uint32_t cls = 3; cls <= 12; ++cls) {
      const RelatorClass& rc = relator_classes()[cls - 1];
      identity(cls, rc.members[0]);
      row(cls, rc.members[1], second_member_steps);
    }
    return out;
  }();
  return rows;
}

RowReplay verify_identification_row(const IdentificationRow& row) {
  Word w = Word::reduced(parse_compact(row.word, 3), 3);
  Word target = Word::reduced(
      parse_compact(relator_classes()[row.class_number - 1].representative, 3),
      3);
  RowReplay result;
  if (row.identity) {
    result.ok = w == target;
    return result;
  }
  Word image = replay(row.stated_steps, w);
  for (std::uint32_t s = 0; s < image.size(); ++s) {
    if (rotated(image, s) == target) {
      result.ok = true;
      result.shift = s;
      return result;
    }
  }
  Word flipped = invert(image);
  for (std::uint32_t s = 0; s < flipped.size(); ++s) {
    if (rotated(flipped, s) == target) {
      result.ok = true;
      result.inversion_appended = true;
      result.shift = s;
      return result;
    }
  }
  return result;
}

}  // namespace starpres
