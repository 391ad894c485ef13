#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "starpres/word.hpp"

namespace starpres {

// Search space for one-relator candidates: cyclically reduced words of the
// given length in which every generator occurs exactly length/rank times
// (counting both signs), positive occurrences strictly outnumber negative
// ones for every generator, and the word starts with g0 g0 g1^{+-1}. Only
// (length 9, rank 3) carries external claims.
struct EnumerationParams {
  std::uint32_t length = 9;
  std::uint32_t rank = 3;
};

bool satisfies_candidate_constraints(const Word& w,
                                     const EnumerationParams& params = {});

// All candidates in lexicographic order (letter order x < x^-1 < y < ...).
std::vector<Word> candidates(const EnumerationParams& params = {});
void for_each_candidate(const EnumerationParams& params,
                        const std::function<void(const Word&)>& fn);

enum class FilterMode {
  proxy,  // simple star graph connected with girth 4 and diameter 2
  exact,  // star graph exactly K_{rank,rank}
};

std::vector<Word> filter_special(const std::vector<Word>& words,
                                 FilterMode mode);

struct EnumerationReport {
  std::uint64_t candidate_count = 0;
  std::uint64_t selected_count = 0;
};

// The length-9 rank-3 one-relator words whose star graph is K_{3,3}, in
// lexicographic order.
std::vector<Word> k33_relators(EnumerationReport* report = nullptr);

}  // namespace starpres
