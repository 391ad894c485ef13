#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "starpres/word.hpp"

namespace starpres {

// Finite presentation with cyclically reduced nonempty relators.
class Presentation {
 public:
  Presentation(std::uint32_t rank, std::vector<Word> relators);

  std::uint32_t rank() const { return rank_; }
  const std::vector<Word>& relators() const { return relators_; }

  friend auto operator<=>(const Presentation&, const Presentation&) = default;

 private:
  std::uint32_t rank_;
  std::vector<Word> relators_;
};

// One-relator convenience: <x_1..x_rank | compact relator>.
Presentation one_relator(std::string_view compact_relator,
                         std::uint32_t rank = 3);

std::string describe(const Presentation& p);

}  // namespace starpres
