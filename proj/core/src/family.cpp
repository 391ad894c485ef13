#include "starpres/family.hpp"

#include <string>

#include "starpres/errors.hpp"

namespace starpres {

namespace {

void check_bound(std::uint32_t n, std::uint32_t bound) {
  if (n < 1) throw std::invalid_argument("family: n >= 1 required");
  if (n > bound) {
    throw ResourceLimitError("family size " + std::to_string(n) +
                             " exceeds bound " + std::to_string(bound) +
                             "; pass a larger bound explicitly");
  }
}

}  // namespace

Word family_word(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("family_word: n >= 1 required");
  LetterSeq letters{Letter(0, 1)};
  for (std::uint32_t m = 2; m <= n; ++m) {
    Letter xm(m - 1, 1);
    letters.push_back(xm);
    for (std::uint32_t j = 1; j < m; ++j) {
      letters.push_back(xm);
      letters.push_back(Letter(m - 1 - j, 1));
    }
  }
  return Word::reduced(std::move(letters), n);
}

Presentation family_presentation(const FamilyParams& params) {
  check_bound(params.n, params.bound);
  if (params.alpha < 1) {
    throw std::invalid_argument("family: alpha >= 1 required");
  }
  Word w = family_word(params.n);
  return Presentation(params.n, {power(w, params.alpha)});
}

KnnVerification verify_knn(const FamilyParams& params) {
  Presentation p = family_presentation(params);
  StarGraph g = StarGraph::build(p);
  KnnVerification v;
  v.distinct_pairs = static_cast<std::uint32_t>(g.multiplicity().size());
  if (params.alpha == 1) {
    v.ok = is_knn(g, params.n);
    v.multiplicity = v.ok ? 1 : 0;
    return v;
  }
  bool uniform = true;
  for (const auto& [e, m] : g.multiplicity()) {
    if (m != params.alpha) uniform = false;
  }
  // Same edge set as the alpha = 1 graph, each pair alpha times.
  StarGraph base = StarGraph::build(
      family_presentation({params.n, 1, params.bound}));
  v.ok = uniform && is_knn(base, params.n) &&
         g.multiplicity().size() == base.multiplicity().size();
  if (v.ok) v.multiplicity = params.alpha;
  return v;
}

std::vector<FamilyStep> pair_count_table(std::uint32_t n,
                                         std::uint32_t bound) {
  check_bound(n, bound);
  std::vector<FamilyStep> out;
  std::uint32_t prev = 1;  // w(1) = x1 yields the single pair {x1, x1^-1}
  for (std::uint32_t m = 2; m <= n; ++m) {
    Presentation p(m, {family_word(m)});
    auto pairs = static_cast<std::uint32_t>(
        StarGraph::build(p).multiplicity().size());
    out.push_back({m, pairs, pairs - prev});
    prev = pairs;
  }
  return out;
}

}  // namespace starpres
