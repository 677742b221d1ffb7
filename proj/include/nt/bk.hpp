#pragma once

#include <vector>

#include "nt/dyck.hpp"
#include "nt/perm_core.hpp"

namespace nt {

// Row segments, top row first; each segment is s_a s_{a+1} ... s_b.
struct SegmentDecomposition {
  std::vector<std::vector<int>> segments;

  ReducedWord word(int n) const;
};

SegmentDecomposition segments(const DyckPath& p);
Permutation path_to_perm(const DyckPath& p);
DyckPath perm_to_path(const Permutation& w);
// brute-force inverse: scans the paths whose area is the length of w
DyckPath perm_to_path_search(const Permutation& w);

const Pattern& pattern_312();

}  // namespace nt
