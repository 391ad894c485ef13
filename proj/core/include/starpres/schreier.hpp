#pragma once

#include <cstdint>
#include <vector>

#include "starpres/coset_table.hpp"
#include "starpres/presentation.hpp"
#include "starpres/word.hpp"

namespace starpres {

// Presentation of a finite-index subgroup on its Schreier generators.
// For index k over an ambient rank-n group the spanning tree of the coset
// graph eliminates k-1 of the k*n generators, leaving k*(n-1)+1.
struct SubgroupPresentation {
  std::uint32_t generator_count = 0;
  std::vector<Word> relators;  // over the Schreier generators; may be empty words

  bool operator==(const SubgroupPresentation&) const = default;
};

// Reidemeister-Schreier rewriting: Schreier generators are the non-tree
// entries (coset, positive generator) of the table, the tree being grown from
// the base coset in scan order; one rewritten relator per (coset, relator)
// pair, freely reduced.
SubgroupPresentation schreier_presentation(const Presentation& p,
                                           const CosetTable& table);

}  // namespace starpres
