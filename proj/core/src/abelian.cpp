#include "starpres/abelian.hpp"

#include <algorithm>
#include <sstream>

#include "starpres/word.hpp"

namespace starpres {

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (rank > 0) {
    out << "Z";
    if (rank > 1) out << "^" << rank;
    first = false;
  }
  for (const BigInt& d : torsion) {
    if (!first) out << " + ";
    out << "Z_" << d;
    first = false;
  }
  return out.str();
}

bool AbelianGroup::operator<(const AbelianGroup& other) const {
  if (rank != other.rank) return rank < other.rank;
  return std::lexicographical_compare(torsion.begin(), torsion.end(),
                                      other.torsion.begin(),
                                      other.torsion.end());
}

namespace {

AbelianGroup from_exponent_matrix(std::uint32_t generators,
                                  const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), generators);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < generators; ++j) m.at(i, j) = rows[i][j];
  const SmithDecomposition d = smith_normal_form(m);

  AbelianGroup g;
  std::uint32_t matrix_rank = 0;
  const std::size_t diag = std::min(d.s.rows(), d.s.cols());
  for (std::size_t t = 0; t < diag; ++t) {
    const BigInt& entry = d.s.at(t, t);
    if (entry == 0) continue;
    ++matrix_rank;
    if (entry > 1) g.torsion.push_back(entry);
  }
  g.rank = generators - matrix_rank;
  return g;
}

}  // namespace

AbelianGroup abelianization(const Presentation& p) {
  std::vector<std::vector<long long>> rows;
  rows.reserve(p.relators().size());
  for (const Word& r : p.relators()) rows.push_back(exponent_vector(r));
  return from_exponent_matrix(p.rank(), rows);
}

AbelianGroup abelianization(const SubgroupPresentation& sp) {
  std::vector<std::vector<long long>> rows;
  rows.reserve(sp.relators.size());
  for (const Word& r : sp.relators) rows.push_back(exponent_vector(r));
  return from_exponent_matrix(sp.generator_count, rows);
}

}  // namespace starpres
