#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starpres/classify.hpp"
#include "starpres/presentation.hpp"

namespace starpres {

// Builtin data: the twelve equivalence classes of length-9 rank-3 relators
// with star graph K_{3,3}, their identification table, and the raw
// 32-word enumeration output they partition.

struct RelatorClass {
  std::uint32_t number = 0;            // 1-based class number
  std::string representative;         // compact spelling of w0
  std::string representative_factors; // exponent spelling of w0
  std::vector<std::string> members;   // compact spellings, published order
};

const std::vector<RelatorClass>& relator_classes();

// The 32 enumerated words in their published order.
const std::vector<std::string>& published_k33_words();

// G_i = <x,y,z | w0(i)>, i in 1..12.
Presentation group(std::uint32_t i);
std::string group_name(std::uint32_t i);

// One row of the identification table: the stated composition carrying
// `word` to the class representative, ending in an unspecified rotation.
struct IdentificationRow {
  std::uint32_t class_number = 0;
  std::string word;        // compact spelling
  Witness stated_steps;    // as printed, without the trailing rotation
  bool identity = false;   // representative row: no steps, no rotation
};

const std::vector<IdentificationRow>& identification_rows();

struct RowReplay {
  bool ok = false;
  bool inversion_appended = false;  // stated steps reached w0^-1 only
  std::uint32_t shift = 0;          // resolved rotation amount
};

// Replays the stated steps and resolves the unspecified rotation; when no
// rotation aligns, retries with a single appended inversion and reports it.
RowReplay verify_identification_row(const IdentificationRow& row);

}  // namespace starpres
