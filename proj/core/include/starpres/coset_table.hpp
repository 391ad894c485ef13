#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "starpres/presentation.hpp"

namespace starpres {

// Complete coset table of a finite-index subgroup: row per coset, column per
// signed generator (letter code order x, x^-1, y, y^-1, ...). Cosets are
// numbered 0..index-1 in first-appearance (scan) order; coset 0 is the
// subgroup itself. Reports print cosets 1-based.
class CosetTable {
 public:
  CosetTable(std::uint32_t rank, std::vector<std::uint32_t> entries);

  std::uint32_t rank() const { return rank_; }
  std::uint32_t index() const {
    return static_cast<std::uint32_t>(entries_.size() / (2 * rank_));
  }
  std::uint32_t entry(std::uint32_t coset, Letter l) const {
    return entries_[coset * 2 * rank_ + l.code()];
  }
  // Image of a coset under a word, letter by letter.
  std::uint32_t trace(std::uint32_t coset, const Word& w) const;
  const std::vector<std::uint32_t>& entries() const { return entries_; }

  friend auto operator<=>(const CosetTable&, const CosetTable&) = default;

 private:
  std::uint32_t rank_;
  std::vector<std::uint32_t> entries_;
};

struct TableValidity {
  bool complete = false;
  bool inverse_consistent = false;  // columns g and g^-1 mutually inverse
  bool relators_close = false;      // every relator fixes every coset
  bool standardized = false;        // first-appearance numbering from coset 0
  bool ok() const {
    return complete && inverse_consistent && relators_close && standardized;
  }
};

TableValidity validate(const CosetTable& t, const Presentation& p);

// Renumbers cosets in first-appearance order scanning rows from `basepoint`;
// the result is the standardized table of the conjugate subgroup fixing that
// coset.
CosetTable restandardize(const CosetTable& t, std::uint32_t basepoint);

}  // namespace starpres
