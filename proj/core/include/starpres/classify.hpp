#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "starpres/signed_permutation.hpp"
#include "starpres/word.hpp"

namespace starpres {

// All 48 rank-3 signed permutations, deterministically ordered.
const std::vector<SignedPermutation>& symmetry_group();

// One move in a relator identification: a named rank-3 symmetry, inversion,
// or a rotation.
struct WitnessStep {
  enum class Kind { perm, invert, rotate };
  enum class Perm { phi_x, phi_y, phi_z, rho_x, rho_y, rho_z };

  Kind kind = Kind::invert;
  Perm perm = Perm::phi_x;   // when kind == perm
  std::uint32_t shift = 0;   // when kind == rotate

  static WitnessStep permutation(Perm p) { return {Kind::perm, p, 0}; }
  static WitnessStep inversion() { return {Kind::invert, Perm::phi_x, 0}; }
  static WitnessStep rotation(std::uint32_t s) {
    return {Kind::rotate, Perm::phi_x, s};
  }

  friend auto operator<=>(const WitnessStep&, const WitnessStep&) = default;
};

using Witness = std::vector<WitnessStep>;

SignedPermutation named_permutation(WitnessStep::Perm p);
Word replay(const Witness& witness, const Word& w);
std::string witness_to_string(const Witness& witness);

// Closure of a cyclically reduced word under the 48 signed permutations,
// rotation and inversion.
std::set<Word> orbit(const Word& w);

// Breadth-first search for a move sequence taking `from` to `to`; steps are
// the six named symmetries, inversion and single rotations.
std::optional<Witness> find_witness(const Word& from, const Word& to,
                                    std::uint32_t max_steps = 10);

struct EquivalenceClass {
  Word representative;  // lexicographically least member
  std::vector<Word> members;
  std::map<Word, Witness> witnesses;  // member -> representative
};

// Partition into orbit classes, sorted by representative. Input words must
// be cyclically reduced, rank 3 and pairwise distinct.
std::vector<EquivalenceClass> partition(const std::vector<Word>& words);

}  // namespace starpres
