#include "starpres/low_index.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "starpres/errors.hpp"

namespace starpres {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

// Backtracking state: a partial table over at most max_index cosets with a
// trail for undo. Definitions always fill the first undefined slot in scan
// order (row by row, columns in letter-code order), so completed tables come
// out standardized and each subgroup is reached exactly once.
class Enumerator {
 public:
  Enumerator(const Presentation& p, std::uint32_t max_index)
      : rank_(p.rank()),
        cols_(2 * p.rank()),
        max_index_(max_index),
        table_(static_cast<std::size_t>(max_index) * cols_, kUnset),
        num_cosets_(1) {
    for (const Word& r : p.relators()) relators_.push_back(r.letters());
  }

  std::vector<CosetTable> run() {
    solve();
    return std::move(results_);
  }

 private:
  std::uint32_t& at(std::uint32_t coset, std::uint32_t code) {
    return table_[static_cast<std::size_t>(coset) * cols_ + code];
  }
  std::uint32_t get(std::uint32_t coset, std::uint32_t code) const {
    return table_[static_cast<std::size_t>(coset) * cols_ + code];
  }

  void define(std::uint32_t coset, std::uint32_t code, std::uint32_t image) {
    at(coset, code) = image;
    at(image, code ^ 1u) = coset;
    trail_.emplace_back(coset, code);
  }

  void undo_to(std::size_t mark, std::uint32_t saved_cosets) {
    while (trail_.size() > mark) {
      auto [coset, code] = trail_.back();
      trail_.pop_back();
      std::uint32_t image = at(coset, code);
      at(coset, code) = kUnset;
      at(image, code ^ 1u) = kUnset;
    }
    num_cosets_ = saved_cosets;
  }

  // Scan one relator at one coset, filling a forced slot when exactly one
  // gap remains. Returns false on a contradiction.
  bool scan(std::uint32_t coset, const LetterSeq& rel, bool& deduced) {
    std::uint32_t f = coset;
    std::size_t i = 0;
    while (i < rel.size()) {
      std::uint32_t next = get(f, rel[i].code());
      if (next == kUnset) break;
      f = next;
      ++i;
    }
    if (i == rel.size()) return f == coset;
    std::uint32_t b = coset;
    std::size_t j = rel.size();
    while (j - 1 > i) {
      std::uint32_t prev = get(b, rel[j - 1].inverse().code());
      if (prev == kUnset) break;
      b = prev;
      --j;
    }
    if (j - 1 == i) {
      // One undefined step from f via rel[i] to b.
      if (get(b, rel[i].inverse().code()) != kUnset) return false;
      define(f, rel[i].code(), b);
      deduced = true;
    }
    return true;
  }

  bool propagate() {
    bool deduced = true;
    while (deduced) {
      deduced = false;
      for (std::uint32_t c = 0; c < num_cosets_; ++c) {
        for (const LetterSeq& rel : relators_) {
          if (!scan(c, rel, deduced)) return false;
        }
      }
    }
    return true;
  }

  bool find_undefined(std::uint32_t& coset, std::uint32_t& code) const {
    for (std::uint32_t c = 0; c < num_cosets_; ++c) {
      for (std::uint32_t g = 0; g < cols_; ++g) {
        if (get(c, g) == kUnset) {
          coset = c;
          code = g;
          return true;
        }
      }
    }
    return false;
  }

  void emit() {
    std::vector<std::uint32_t> entries(
        table_.begin(),
        table_.begin() + static_cast<std::size_t>(num_cosets_) * cols_);
    results_.emplace_back(rank_, std::move(entries));
  }

  void solve() {
    std::uint32_t coset = 0, code = 0;
    if (!find_undefined(coset, code)) {
      emit();
      return;
    }
    std::uint32_t limit = std::min(num_cosets_ + 1, max_index_);
    for (std::uint32_t image = 0; image < limit; ++image) {
      bool fresh = image == num_cosets_;
      if (!fresh && get(image, code ^ 1u) != kUnset) continue;
      std::size_t mark = trail_.size();
      std::uint32_t saved = num_cosets_;
      if (fresh) ++num_cosets_;
      define(coset, code, image);
      if (propagate()) solve();
      undo_to(mark, saved);
    }
  }

  std::uint32_t rank_;
  std::uint32_t cols_;
  std::uint32_t max_index_;
  std::vector<LetterSeq> relators_;
  std::vector<std::uint32_t> table_;
  std::uint32_t num_cosets_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> trail_;
  std::vector<CosetTable> results_;
};

}  // namespace

std::vector<CosetTable> low_index(const Presentation& p,
                                  std::uint32_t max_index, SubgroupMode mode,
                                  const LowIndexOptions& options) {
  if (max_index == 0) {
    throw std::invalid_argument("low_index: max_index >= 1 required");
  }
  if (max_index > options.bound) {
    throw ResourceLimitError(
        "low_index: max_index " + std::to_string(max_index) +
        " exceeds bound " + std::to_string(options.bound) +
        "; raise the bound explicitly to search deeper");
  }
  std::vector<CosetTable> all = Enumerator(p, max_index).run();
  std::sort(all.begin(), all.end(),
            [](const CosetTable& a, const CosetTable& b) {
              if (a.index() != b.index()) return a.index() < b.index();
              return a.entries() < b.entries();
            });
  if (mode == SubgroupMode::all) return all;
  std::vector<CosetTable> reps;
  for (const CosetTable& t : all) {
    bool least = true;
    for (std::uint32_t b = 1; b < t.index() && least; ++b) {
      if (restandardize(t, b).entries() < t.entries()) least = false;
    }
    if (least) reps.push_back(t);
  }
  return reps;
}

std::uint32_t conjugacy_class_size(const CosetTable& t) {
  std::set<std::vector<std::uint32_t>> distinct;
  for (std::uint32_t b = 0; b < t.index(); ++b) {
    distinct.insert(restandardize(t, b).entries());
  }
  return static_cast<std::uint32_t>(distinct.size());
}

}  // namespace starpres
