#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "starpres/abelian.hpp"
#include "starpres/low_index.hpp"
#include "starpres/presentation.hpp"

namespace starpres {

// Multiset of abelianizations, keyed by invariant with multiplicity.
using InvariantMultiset = std::map<AbelianGroup, std::uint32_t>;

// Certificate that two groups differ: at `index` the named invariant occurs a
// different number of times among the index-`index` subgroup abelianizations.
struct SeparationWitness {
  std::uint32_t index = 0;
  AbelianGroup invariant;
  std::uint32_t count_left = 0;
  std::uint32_t count_right = 0;

  bool operator==(const SeparationWitness&) const = default;
};

// Abelianizations of the subgroups of index exactly k. In all-subgroups mode
// (the default) every subgroup contributes once; in conjugacy-class mode one
// per class. Conjugate subgroups have equal abelianizations, so the two modes
// share support and differ only in multiplicities.
InvariantMultiset invariant_multiset(const Presentation& p, std::uint32_t k,
                                     SubgroupMode mode = SubgroupMode::all,
                                     const LowIndexOptions& options = {});

// Slot k holds invariant_multiset(p, k) for k = 1..max_index; slot 0 is empty.
// One enumeration pass at depth max_index serves every slot.
std::vector<InvariantMultiset> invariant_profile(
    const Presentation& p, std::uint32_t max_index,
    SubgroupMode mode = SubgroupMode::all,
    const LowIndexOptions& options = {});

// Smallest index <= max_index at which the all-subgroups invariant multisets
// of p and q differ; nullopt when every index agrees (which is not an
// isomorphism proof). Among the invariants whose counts differ at that index,
// prefers one absent on a side, then one with torsion, then the least.
std::optional<SeparationWitness> distinguish(
    const Presentation& p, const Presentation& q, std::uint32_t max_index,
    const LowIndexOptions& options = {});

// Pairwise witnesses; cell (i, j) compares ps[i] (left) against ps[j]
// (right). Diagonal cells are nullopt.
std::vector<std::vector<std::optional<SeparationWitness>>> separation_matrix(
    const std::vector<Presentation>& ps, std::uint32_t max_index,
    const LowIndexOptions& options = {});

// The comparison behind distinguish, exposed for reuse over precomputed
// profiles.
std::optional<SeparationWitness> compare_profiles(
    const std::vector<InvariantMultiset>& left,
    const std::vector<InvariantMultiset>& right);

}  // namespace starpres
