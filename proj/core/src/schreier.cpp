#include "starpres/schreier.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace starpres {

SubgroupPresentation schreier_presentation(const Presentation& p,
                                           const CosetTable& table) {
  if (table.rank() != p.rank())
    throw std::invalid_argument("coset table rank does not match presentation");
  const std::uint32_t rank = p.rank();
  const std::uint32_t index = table.index();

  // Spanning tree of the coset graph, grown from coset 0 in scan order. A
  // tree edge discovered as (coset, a) with a negative is the same unordered
  // edge as (target, a.inverse()), so it is recorded under its positive
  // traversal.
  std::vector<bool> is_tree(static_cast<std::size_t>(index) * rank, false);
  std::vector<bool> seen(index, false);
  std::vector<std::uint32_t> queue;
  seen[0] = true;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t c = queue[head];
    for (std::uint32_t code = 0; code < 2 * rank; ++code) {
      const Letter a = Letter::from_code(code);
      const std::uint32_t target = table.entry(c, a);
      if (seen[target]) continue;
      seen[target] = true;
      queue.push_back(target);
      if (a.negative())
        is_tree[static_cast<std::size_t>(target) * rank + a.generator()] = true;
      else
        is_tree[static_cast<std::size_t>(c) * rank + a.generator()] = true;
    }
  }

  // Number the non-tree (coset, generator) pairs in scan order.
  std::vector<std::uint32_t> gen_index(static_cast<std::size_t>(index) * rank);
  std::uint32_t next_gen = 0;
  for (std::size_t slot = 0; slot < gen_index.size(); ++slot)
    if (!is_tree[slot]) gen_index[slot] = next_gen++;

  SubgroupPresentation sp;
  sp.generator_count = next_gen;

  for (std::uint32_t c = 0; c < index; ++c)
    for (const Word& r : p.relators()) {
      LetterSeq rewritten;
      std::uint32_t cur = c;
      for (const Letter a : r.letters()) {
        if (a.negative()) {
          const std::uint32_t nxt = table.entry(cur, a);
          const std::size_t slot =
              static_cast<std::size_t>(nxt) * rank + a.generator();
          if (!is_tree[slot])
            rewritten.push_back(Letter(gen_index[slot], -1));
          cur = nxt;
        } else {
          const std::size_t slot =
              static_cast<std::size_t>(cur) * rank + a.generator();
          if (!is_tree[slot])
            rewritten.push_back(Letter(gen_index[slot], +1));
          cur = table.entry(cur, a);
        }
      }
      sp.relators.push_back(Word::reduced(rewritten, sp.generator_count));
    }
  return sp;
}

}  // namespace starpres
