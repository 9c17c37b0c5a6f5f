#include "qlb/hierarchy.hpp"

namespace qlb {

Hierarchy build_hierarchy(const HighlightedPartition& topSeed,
                          std::size_t cap) {
  Hierarchy h;
  h.n = topSeed.partition.n;
  h.k = popcount_mask(topSeed.highlighted_mask());
  if (h.k < 1) throw ParseError("empty highlighted block");
  h.topSeed = topSeed;

  h.seeds.assign(static_cast<std::size_t>(h.k), topSeed);
  for (int l = h.k - 1; l >= 1; --l) {
    const auto& above = h.seeds[static_cast<std::size_t>(l)];
    const auto elems = mask_elements(above.highlighted_mask());
    h.seeds[static_cast<std::size_t>(l - 1)] = split_off(above, elems.back());
  }

  h.M.reserve(static_cast<std::size_t>(h.k));
  h.Mo.reserve(static_cast<std::size_t>(h.k));
  for (int l = 1; l <= h.k; ++l) {
    const auto& seed = h.seeds[static_cast<std::size_t>(l - 1)];
    h.M.push_back(orbit_of(seed, KnowledgeSystem::highlighted_superset(), cap));
    h.Mo.push_back(orbit_of(unhighlight(seed), KnowledgeSystem::none(), cap));
  }
  return h;
}

} // namespace qlb
