#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "starpres/presentation.hpp"
#include "starpres/schreier.hpp"
#include "starpres/snf.hpp"

namespace starpres {

// Finitely generated abelian group in invariant-factor form:
// Z^rank + Z_{d1} + ... with d1 | d2 | ... and every di > 1.
struct AbelianGroup {
  std::uint32_t rank = 0;
  std::vector<BigInt> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
  // "0", "Z", "Z^4 + Z_9", "Z_3 + Z_3", ...
  std::string to_string() const;

  bool operator==(const AbelianGroup&) const = default;
  bool operator<(const AbelianGroup& other) const;
};

// Quotient by the commutator subgroup, computed from the Smith normal form of
// the exponent matrix of the relators.
AbelianGroup abelianization(const Presentation& p);
AbelianGroup abelianization(const SubgroupPresentation& sp);

}  // namespace starpres
