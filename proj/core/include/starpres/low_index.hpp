#pragma once

#include <cstdint>
#include <vector>

#include "starpres/coset_table.hpp"
#include "starpres/presentation.hpp"

namespace starpres {

enum class SubgroupMode {
  all,                // one table per subgroup of index <= max_index
  conjugacy_classes,  // lexicographically least table per conjugacy class
};

struct LowIndexOptions {
  std::uint32_t bound = 6;  // refuse deeper searches unless raised explicitly
};

// Backtracking enumeration of standardized complete coset tables on at most
// max_index cosets in which every relator closes. In `all` mode the tables
// are in bijection with the subgroups of index <= max_index.
std::vector<CosetTable> low_index(const Presentation& p,
                                  std::uint32_t max_index,
                                  SubgroupMode mode = SubgroupMode::all,
                                  const LowIndexOptions& options = {});

// Number of distinct conjugates of the subgroup a table describes (orbit of
// basepoints under restandardization).
std::uint32_t conjugacy_class_size(const CosetTable& t);

}  // namespace starpres
