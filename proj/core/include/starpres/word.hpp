#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "starpres/letter.hpp"

namespace starpres {

using LetterSeq = std::vector<Letter>;

// A freely reduced word in the free group of a fixed rank. Immutable value
// type; every constructor path validates rank bounds and free reducedness.
class Word {
 public:
  Word() = default;
  explicit Word(std::uint32_t rank) : rank_(rank) {}

  // Free-reduces the sequence; the only way to build from raw letters.
  static Word reduced(LetterSeq letters, std::uint32_t rank);

  std::uint32_t rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const LetterSeq& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  bool cyclically_reduced() const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  LetterSeq letters_;
  std::uint32_t rank_ = 0;
};

Word free_reduce(LetterSeq letters, std::uint32_t rank);
Word cyclic_reduce(const Word& w);
Word invert(const Word& w);
Word concat(const Word& a, const Word& b);

// Rotation by s: letters[s..] + letters[..s]. Requires a cyclically reduced
// word so the result is again freely (and cyclically) reduced.
Word rotated(const Word& w, std::size_t s);
std::vector<Word> rotations(const Word& w);

// w^n for n >= 1; requires w cyclically reduced.
Word power(const Word& w, std::uint32_t n);

// Lexicographically least word among all rotations of w and of w^-1, under
// the letter order x < x^-1 < y < y^-1 < ... Canonical form of the
// cyclic-word-up-to-inversion equivalence class. Requires w cyclically
// reduced.
Word canonical_cyclic(const Word& w);

// Signed sum of exponents per generator.
std::vector<long long> exponent_vector(const Word& w);

// Compact spelling. Rank <= 3 uses x,y,z with uppercase inverses ("xxyXz");
// larger ranks use space-separated x1,x2,... with a trailing apostrophe for
// the inverse ("x1 x2 x2' x1"). Parsing does not free-reduce.
LetterSeq parse_compact(std::string_view text, std::uint32_t rank);
std::string format_compact(const LetterSeq& letters, std::uint32_t rank);
std::string format_compact(const Word& w);

// Exponent spelling: whitespace-separated g^k factors ("x^2 y^-1 z"). A zero
// exponent is an error. Parsing does not free-reduce.
LetterSeq parse_exponent(std::string_view text, std::uint32_t rank);
std::string format_exponent(const Word& w);

}  // namespace starpres
