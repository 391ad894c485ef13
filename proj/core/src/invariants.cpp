#include "starpres/invariants.hpp"

#include <algorithm>

#include "starpres/schreier.hpp"

namespace starpres {

std::vector<InvariantMultiset> invariant_profile(const Presentation& p,
                                                 std::uint32_t max_index,
                                                 SubgroupMode mode,
                                                 const LowIndexOptions& options) {
  std::vector<InvariantMultiset> profile(static_cast<std::size_t>(max_index) +
                                         1);
  for (const CosetTable& t : low_index(p, max_index, mode, options))
    ++profile[t.index()][abelianization(schreier_presentation(p, t))];
  return profile;
}

InvariantMultiset invariant_multiset(const Presentation& p, std::uint32_t k,
                                     SubgroupMode mode,
                                     const LowIndexOptions& options) {
  return invariant_profile(p, k, mode, options)[k];
}

std::optional<SeparationWitness> compare_profiles(
    const std::vector<InvariantMultiset>& left,
    const std::vector<InvariantMultiset>& right) {
  const std::size_t depth = std::min(left.size(), right.size());
  for (std::size_t k = 1; k < depth; ++k) {
    const InvariantMultiset& a = left[k];
    const InvariantMultiset& b = right[k];
    if (a == b) continue;
    // Collect every invariant whose counts differ; maps iterate in invariant
    // order so candidates come out sorted.
    std::vector<SeparationWitness> differing;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
        differing.push_back({static_cast<std::uint32_t>(k), ia->first,
                             ia->second, 0});
        ++ia;
      } else if (ia == a.end() || ib->first < ia->first) {
        differing.push_back({static_cast<std::uint32_t>(k), ib->first, 0,
                             ib->second});
        ++ib;
      } else {
        if (ia->second != ib->second)
          differing.push_back({static_cast<std::uint32_t>(k), ia->first,
                               ia->second, ib->second});
        ++ia;
        ++ib;
      }
    }
    // An invariant entirely absent on one side is the sharpest witness; a
    // torsion invariant beats bookkeeping differences in the free parts.
    auto strength = [](const SeparationWitness& w) {
      int s = 0;
      if (w.count_left == 0 || w.count_right == 0) s += 2;
      if (!w.invariant.torsion.empty()) s += 1;
      return s;
    };
    const SeparationWitness* best = &differing.front();
    for (const SeparationWitness& w : differing)
      if (strength(w) > strength(*best)) best = &w;
    return *best;
  }
  return std::nullopt;
}

std::optional<SeparationWitness> distinguish(const Presentation& p,
                                             const Presentation& q,
                                             std::uint32_t max_index,
                                             const LowIndexOptions& options) {
  return compare_profiles(
      invariant_profile(p, max_index, SubgroupMode::all, options),
      invariant_profile(q, max_index, SubgroupMode::all, options));
}

std::vector<std::vector<std::optional<SeparationWitness>>> separation_matrix(
    const std::vector<Presentation>& ps, std::uint32_t max_index,
    const LowIndexOptions& options) {
  std::vector<std::vector<InvariantMultiset>> profiles;
  profiles.reserve(ps.size());
  for (const Presentation& p : ps)
    profiles.push_back(
        invariant_profile(p, max_index, SubgroupMode::all, options));

  std::vector<std::vector<std::optional<SeparationWitness>>> matrix(
      ps.size(), std::vector<std::optional<SeparationWitness>>(ps.size()));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      matrix[i][j] = compare_profiles(profiles[i], profiles[j]);
      if (matrix[i][j]) {
        SeparationWitness mirrored = *matrix[i][j];
        std::swap(mirrored.count_left, mirrored.count_right);
        matrix[j][i] = mirrored;
      }
    }
  return matrix;
}

}  // namespace starpres
