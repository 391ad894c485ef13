#include "starpres/presentation.hpp"

#include <stdexcept>

namespace starpres {

Presentation::Presentation(std::uint32_t rank, std::vector<Word> relators)
    : rank_(rank), relators_(std::move(relators)) {
  for (const Word& r : relators_) {
    if (r.rank() != rank_) {
      throw std::invalid_argument("presentation: relator rank mismatch");
    }
    if (r.empty() || !r.cyclically_reduced()) {
      throw std::invalid_argument(
          "presentation: relators must be nonempty and cyclically reduced");
    }
  }
}

Presentation one_relator(std::string_view compact_relator,
                         std::uint32_t rank) {
  Word r = Word::reduced(parse_compact(compact_relator, rank), rank);
  return Presentation(rank, {r});
}

std::string describe(const Presentation& p) {
  std::string gens;
  for (std::uint32_t g = 0; g < p.rank(); ++g) {
    if (g) gens += ",";
    gens += format_compact(LetterSeq{Letter(g, 1)}, p.rank());
  }
  std::string rels;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i) rels += ", ";
    rels += format_compact(p.relators()[i]);
  }
  return "<" + gens + " | " + rels + ">";
}

}  // namespace starpres
