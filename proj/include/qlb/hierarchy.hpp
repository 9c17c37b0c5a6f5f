#pragma once

#include "qlb/orbit.hpp"

namespace qlb {

// Orbit chain below a top seed whose highlighted block has size k. Level
// seeds descend by splitting one element off the highlighted block, so
// M[l-1] is the orbit of the level-l seed (highlighted-superset knowledge)
// and Mo[j-1] is the orbit of the level-j seed with the highlight dropped.
struct Hierarchy {
  int n = 0;
  int k = 0;
  HighlightedPartition topSeed;
  std::vector<HighlightedPartition> seeds; // seeds[l-1], l = 1..k
  std::vector<PartitionOrbit> M;           // highlighted orbits, l = 1..k
  std::vector<PartitionOrbit> Mo;          // unhighlighted orbits, j = 1..k
};

Hierarchy build_hierarchy(const HighlightedPartition& topSeed,
                          std::size_t cap = kDefaultOrbitCap);

} // namespace qlb
