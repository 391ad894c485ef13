#include "starpres/classify.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace starpres {

const std::vector<SignedPermutation>& symmetry_group() {
  static const std::vector<SignedPermutation> group = [] {
    std::vector<SignedPermutation> out;
    std::vector<std::uint32_t> perm{0, 1, 2};
    do {
      for (std::uint32_t signs = 0; signs < 8; ++signs) {
        std::vector<Letter> images;
        for (std::uint32_t g = 0; g < 3; ++g) {
          images.emplace_back(perm[g], (signs >> g) & 1u ? -1 : 1);
        }
        out.push_back(SignedPermutation::from_images(std::move(images)));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
  }();
  return group;
}

SignedPermutation named_permutation(WitnessStep::Perm p) {
  switch (p) {
    case WitnessStep::Perm::phi_x: return fix_and_swap(0);
    case WitnessStep::Perm::phi_y: return fix_and_swap(1);
    case WitnessStep::Perm::phi_z: return fix_and_swap(2);
    case WitnessStep::Perm::rho_x: return invert_generator(0, 3);
    case WitnessStep::Perm::rho_y: return invert_generator(1, 3);
    case WitnessStep::Perm::rho_z: return invert_generator(2, 3);
  }
  throw std::logic_error("unknown permutation name");
}

Word replay(const Witness& witness, const Word& w) {
  Word cur = w;
  for (const WitnessStep& step : witness) {
    switch (step.kind) {
      case WitnessStep::Kind::perm:
        cur = apply(named_permutation(step.perm), cur);
        break;
      case WitnessStep::Kind::invert:
        cur = invert(cur);
        break;
      case WitnessStep::Kind::rotate:
        cur = rotated(cur, step.shift);
        break;
    }
  }
  return cur;
}

std::string witness_to_string(const Witness& witness) {
  if (witness.empty()) return "identity";
  static const char* names[] = {"phi_x", "phi_y", "phi_z",
                                "rho_x", "rho_y", "rho_z"};
  std::string out;
  bool prev_perm = false;
  for (const WitnessStep& step : witness) {
    bool is_perm = step.kind == WitnessStep::Kind::perm;
    if (!out.empty()) out += (prev_perm && is_perm) ? "." : ";";
    switch (step.kind) {
      case WitnessStep::Kind::perm:
        out += names[static_cast<int>(step.perm)];
        break;
      case WitnessStep::Kind::invert:
        out += "inv";
        break;
      case WitnessStep::Kind::rotate:
        out += "rot " + std::to_string(step.shift);
        break;
    }
    prev_perm = is_perm;
  }
  return out;
}

std::set<Word> orbit(const Word& w) {
  if (w.rank() != 3) throw std::invalid_argument("orbit: rank-3 words only");
  if (!w.cyclically_reduced()) {
    throw std::invalid_argument("orbit: word not cyclically reduced");
  }
  std::set<Word> seen;
  std::deque<Word> queue;
  seen.insert(w);
  queue.push_back(w);
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    std::vector<Word> next;
    for (const SignedPermutation& s : symmetry_group()) {
      next.push_back(apply(s, cur));
    }
    next.push_back(invert(cur));
    for (std::size_t s = 1; s < std::max<std::size_t>(cur.size(), 2); ++s) {
      next.push_back(rotated(cur, s));
    }
    for (Word& u : next) {
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  return seen;
}

namespace {

std::vector<std::pair<WitnessStep, Word>> moves(const Word& w) {
  std::vector<std::pair<WitnessStep, Word>> out;
  for (int p = 0; p < 6; ++p) {
    WitnessStep step =
        WitnessStep::permutation(static_cast<WitnessStep::Perm>(p));
    out.emplace_back(step, apply(named_permutation(step.perm), w));
  }
  out.emplace_back(WitnessStep::inversion(), invert(w));
  for (std::uint32_t s = 1; s < w.size(); ++s) {
    out.emplace_back(WitnessStep::rotation(s), rotated(w, s));
  }
  return out;
}

}  // namespace

std::optional<Witness> find_witness(const Word& from, const Word& to,
                                    std::uint32_t max_steps) {
  if (from == to) return Witness{};
  std::map<Word, std::pair<Word, WitnessStep>> back;  // word -> (prev, step)
  std::deque<std::pair<Word, std::uint32_t>> queue{{from, 0}};
  back.emplace(from, std::make_pair(from, WitnessStep::inversion()));
  while (!queue.empty()) {
    auto [cur, depth] = queue.front();
    queue.pop_front();
    if (depth == max_steps) continue;
    for (const auto& [step, next] : moves(cur)) {
      if (back.count(next)) continue;
      back.emplace(next, std::make_pair(cur, step));
      if (next == to) {
        Witness out;
        Word at = next;
        while (at != from) {
          auto& [prev, st] = back.at(at);
          out.push_back(st);
          at = prev;
        }
        std::reverse(out.begin(), out.end());
        return out;
      }
      queue.emplace_back(next, depth + 1);
    }
  }
  return std::nullopt;
}

std::vector<EquivalenceClass> partition(const std::vector<Word>& words) {
  std::set<Word> input(words.begin(), words.end());
  if (input.size() != words.size()) {
    throw std::invalid_argument("partition: duplicate input words");
  }
  std::vector<EquivalenceClass> out;
  std::set<Word> assigned;
  for (const Word& w : input) {
    if (assigned.count(w)) continue;
    std::set<Word> orb = orbit(w);
    EquivalenceClass cls;
    for (const Word& u : input) {
      if (orb.count(u)) {
        cls.members.push_back(u);
        assigned.insert(u);
      }
    }
    cls.representative = cls.members.front();  // input is a sorted set
    for (const Word& u : cls.members) {
      auto witness = find_witness(u, cls.representative);
      if (!witness) {
        throw std::logic_error("partition: no witness within step bound");
      }
      cls.witnesses.emplace(u, *witness);
    }
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const EquivalenceClass& a, const EquivalenceClass& b) {
              return a.representative < b.representative;
            });
  return out;
}

}  // namespace starpres
