#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "starpres/presentation.hpp"
#include "starpres/star_graph.hpp"

namespace starpres {

// The recursive positive-word family with star graph K_{n,n}:
//   w(1) = x1,   w(n) = w(n-1) xn (xn x_{n-1})(xn x_{n-2})...(xn x1),
// a cyclically reduced positive word of length n^2.
Word family_word(std::uint32_t n);

struct FamilyParams {
  std::uint32_t n = 3;
  std::uint32_t alpha = 1;
  std::uint32_t bound = 64;  // resource guard on n
};

// <x1..xn | w(n)^alpha>.
Presentation family_presentation(const FamilyParams& params);

struct KnnVerification {
  bool ok = false;
  std::uint32_t distinct_pairs = 0;  // expected n^2
  std::uint32_t multiplicity = 0;    // common multiplicity (alpha) when ok
};

// For alpha == 1: star graph exactly K_{n,n}. For alpha > 1: simple graph
// K_{n,n} with every pair at uniform multiplicity alpha.
KnnVerification verify_knn(const FamilyParams& params);

struct FamilyStep {
  std::uint32_t n = 0;
  std::uint32_t distinct_pairs = 0;
  std::uint32_t new_pairs = 0;  // increment over w(n-1); 2n-1 for n >= 2
};

// Distinct-pair counts of w(2)..w(n), with per-step increments.
std::vector<FamilyStep> pair_count_table(std::uint32_t n,
                                         std::uint32_t bound = 64);

}  // namespace starpres
