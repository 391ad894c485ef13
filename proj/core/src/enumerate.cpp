#include "starpres/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "starpres/star_graph.hpp"

namespace starpres {

namespace {

void check_params(const EnumerationParams& p) {
  if (p.rank < 2 || p.length == 0 || p.length % p.rank != 0) {
    throw std::invalid_argument(
        "enumeration needs rank >= 2 and rank | length");
  }
}

struct Search {
  EnumerationParams params;
  std::uint32_t max_neg = 0;  // per-generator cap keeping positives strict
  LetterSeq prefix;
  std::vector<std::uint32_t> total_left;
  std::vector<std::uint32_t> neg_used;
  const std::function<void(const Word&)>* emit = nullptr;

  bool may_place(Letter l) const {
    std::uint32_t g = l.generator();
    if (total_left[g] == 0) return false;
    if (l.negative() && neg_used[g] >= max_neg) return false;
    if (!prefix.empty() && prefix.back() == l.inverse()) return false;
    return true;
  }

  void push(Letter l) {
    --total_left[l.generator()];
    if (l.negative()) ++neg_used[l.generator()];
    prefix.push_back(l);
  }

  void pop() {
    Letter l = prefix.back();
    prefix.pop_back();
    ++total_left[l.generator()];
    if (l.negative()) --neg_used[l.generator()];
  }

  void run() {
    if (prefix.size() == params.length) {
      if (prefix.front() != prefix.back().inverse()) {
        (*emit)(Word::reduced(prefix, params.rank));
      }
      return;
    }
    for (std::uint32_t code = 0; code < 2 * params.rank; ++code) {
      Letter l = Letter::from_code(code);
      if (!may_place(l)) continue;
      push(l);
      run();
      pop();
    }
  }
};

}  // namespace

bool satisfies_candidate_constraints(const Word& w,
                                     const EnumerationParams& params) {
  check_params(params);
  if (w.rank() != params.rank || w.size() != params.length) return false;
  if (!w.cyclically_reduced()) return false;
  std::vector<std::uint32_t> pos(params.rank, 0), neg(params.rank, 0);
  for (Letter l : w.letters()) {
    (l.negative() ? neg : pos)[l.generator()]++;
  }
  std::uint32_t per = params.length / params.rank;
  for (std::uint32_t g = 0; g < params.rank; ++g) {
    if (pos[g] + neg[g] != per) return false;
    if (pos[g] <= neg[g]) return false;
  }
  if (w.size() < 3) return false;
  if (w[0] != Letter(0, 1) || w[1] != Letter(0, 1)) return false;
  if (w[2].generator() != 1) return false;
  return true;
}

void for_each_candidate(const EnumerationParams& params,
                        const std::function<void(const Word&)>& fn) {
  check_params(params);
  std::uint32_t per = params.length / params.rank;
  if (per < 2) return;  // the fixed prefix g0 g0 is already impossible
  Search s;
  s.params = params;
  s.max_neg = (per - 1) / 2;
  s.total_left.assign(params.rank, per);
  s.neg_used.assign(params.rank, 0);
  s.emit = &fn;
  s.push(Letter(0, 1));
  s.push(Letter(0, 1));
  for (Letter third : {Letter(1, 1), Letter(1, -1)}) {
    if (!s.may_place(third)) continue;
    s.push(third);
    s.run();
    s.pop();
  }
}

std::vector<Word> candidates(const EnumerationParams& params) {
  std::vector<Word> out;
  for_each_candidate(params, [&](const Word& w) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> filter_special(const std::vector<Word>& words,
                                 FilterMode mode) {
  std::vector<Word> out;
  for (const Word& w : words) {
    Presentation p(w.rank(), {w});
    StarGraph g = StarGraph::build(p);
    bool keep = false;
    if (mode == FilterMode::proxy) {
      GraphAnalysis a = analyze(g.simple());
      keep = a.girth == 4u && a.diameter() == 2u;
    } else {
      keep = is_knn(g, w.rank());
    }
    if (keep) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> k33_relators(EnumerationReport* report) {
  EnumerationParams params;
  std::vector<Word> cand = candidates(params);
  std::vector<Word> out = filter_special(cand, FilterMode::exact);
  if (report) {
    report->candidate_count = cand.size();
    report->selected_count = out.size();
  }
  return out;
}

}  // namespace starpres
