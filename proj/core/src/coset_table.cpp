#include "starpres/coset_table.hpp"

#include <limits>
#include <stdexcept>

namespace starpres {

namespace {
constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
}

CosetTable::CosetTable(std::uint32_t rank, std::vector<std::uint32_t> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank_ == 0 || entries_.empty() || entries_.size() % (2 * rank_) != 0) {
    throw std::invalid_argument("coset table shape mismatch");
  }
  for (std::uint32_t e : entries_) {
    if (e >= index()) {
      throw std::invalid_argument("coset table entry out of range");
    }
  }
}

std::uint32_t CosetTable::trace(std::uint32_t coset, const Word& w) const {
  std::uint32_t at = coset;
  for (Letter l : w.letters()) at = entry(at, l);
  return at;
}

TableValidity validate(const CosetTable& t, const Presentation& p) {
  TableValidity v;
  v.complete = true;  // construction enforces in-range entries everywhere

  v.inverse_consistent = true;
  for (std::uint32_t c = 0; c < t.index(); ++c) {
    for (std::uint32_t g = 0; g < t.rank(); ++g) {
      Letter pos(g, 1);
      std::uint32_t d = t.entry(c, pos);
      if (t.entry(d, pos.inverse()) != c) v.inverse_consistent = false;
    }
  }

  v.relators_close = true;
  for (std::uint32_t c = 0; c < t.index(); ++c) {
    for (const Word& r : p.relators()) {
      if (t.trace(c, r) != c) v.relators_close = false;
    }
  }

  // Standardized: scanning rows in order, each coset > 0 first appears as an
  // entry after all smaller cosets have appeared.
  v.standardized = true;
  std::uint32_t next_new = 1;
  for (std::uint32_t c = 0; c < t.index() && v.standardized; ++c) {
    if (c >= next_new) v.standardized = false;  // unreachable row
    for (std::uint32_t code = 0; code < 2 * t.rank(); ++code) {
      std::uint32_t d = t.entry(c, Letter::from_code(code));
      if (d == next_new) {
        ++next_new;
      } else if (d > next_new) {
        v.standardized = false;
        break;
      }
    }
  }
  if (next_new != t.index()) v.standardized = false;
  return v;
}

CosetTable restandardize(const CosetTable& t, std::uint32_t basepoint) {
  if (basepoint >= t.index()) {
    throw std::invalid_argument("restandardize: basepoint out of range");
  }
  std::vector<std::uint32_t> old_to_new(t.index(), kUnset);
  std::vector<std::uint32_t> new_to_old;
  old_to_new[basepoint] = 0;
  new_to_old.push_back(basepoint);
  for (std::uint32_t c = 0; c < new_to_old.size(); ++c) {
    for (std::uint32_t code = 0; code < 2 * t.rank(); ++code) {
      std::uint32_t d = t.entry(new_to_old[c], Letter::from_code(code));
      if (old_to_new[d] == kUnset) {
        old_to_new[d] = static_cast<std::uint32_t>(new_to_old.size());
        new_to_old.push_back(d);
      }
    }
  }
  if (new_to_old.size() != t.index()) {
    throw std::invalid_argument("restandardize: table not transitive");
  }
  std::vector<std::uint32_t> entries(t.entries().size());
  for (std::uint32_t c = 0; c < t.index(); ++c) {
    for (std::uint32_t code = 0; code < 2 * t.rank(); ++code) {
      entries[c * 2 * t.rank() + code] =
          old_to_new[t.entry(new_to_old[c], Letter::from_code(code))];
    }
  }
  return CosetTable(t.rank(), std::move(entries));
}

}  // namespace starpres
