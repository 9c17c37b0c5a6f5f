#pragma once

#include "qlb/knowledge.hpp"

namespace qlb {

// The S_n orbit of a seed partition: every partition with the same block
// size multiset, each exactly once, sorted canonically. For a highlighted
// seed the members are (partition, highlighted block) pairs where the
// highlighted block has the seed's highlighted size.
struct PartitionOrbit {
  KnowledgeSystem knowledge;
  bool highlighted = false;
  std::vector<Partition> members;
  std::vector<int> highlightIdx; // parallel to members when highlighted

  std::size_t size() const { return members.size(); }
  const Partition& part(std::size_t m) const { return members[m]; }
  int hi(std::size_t m) const {
    return highlighted ? highlightIdx[m] : -1;
  }
  std::size_t blocksPerMember() const { return members.at(0).numBlocks(); }
};

// Exact orbit size from the size multiset: n! / prod |B|! / prod mult_s!
// (times the multiplicity of the highlighted size when highlightSize > 0).
// Throws CapExceeded if the value cannot be represented exactly.
std::uint64_t orbit_size_formula(int n, const std::vector<int>& sizes,
                                 int highlightSize = 0);

PartitionOrbit orbit_of(const Partition& seed,
                        KnowledgeSystem ks = KnowledgeSystem::none(),
                        std::size_t cap = kDefaultOrbitCap);
PartitionOrbit orbit_of(const HighlightedPartition& seed,
                        KnowledgeSystem ks = KnowledgeSystem::highlighted_superset(),
                        std::size_t cap = kDefaultOrbitCap);

// Index of (partition, highlight) in the orbit's canonical order; throws if
// absent. highlightIdx is ignored for unhighlighted orbits.
std::size_t member_index(const PartitionOrbit& orbit, const Partition& p,
                         int highlightIdx = -1);

} // namespace qlb
