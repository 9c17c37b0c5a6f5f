#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlb/util.hpp"

namespace qlb {

// Set partition of [1..n]. Blocks are element bitmasks (bit i-1 <-> element
// i) kept canonical: sorted ascending by minimum element. Equality of the
// blocks vector is therefore partition equality.
struct Partition {
  int n = 0;
  std::vector<std::uint64_t> blocks;

  std::size_t numBlocks() const { return blocks.size(); }

  // Index of the block containing element i (1-based element).
  std::size_t blockOf(int i) const;

  // Multiset of block sizes, ascending.
  std::vector<int> sizes() const;

  bool operator==(const Partition& o) const = default;

  // Validates coverage/disjointness and sorts blocks canonically.
  static Partition from_blocks(int n, std::vector<std::uint64_t> blocks);
};

// Partition with one distinguished block.
struct HighlightedPartition {
  Partition partition;
  std::size_t highlighted = 0; // index into partition.blocks

  std::uint64_t highlighted_mask() const {
    return partition.blocks[highlighted];
  }
  bool operator==(const HighlightedPartition& o) const = default;
};

// Text form: blocks separated by '/', elements by ',', 1-based; a leading
// '*' on one block highlights it. "*1,2,3/4/5,6" is the 3-block partition
// of [6] with {1,2,3} highlighted.
struct ParsedPartition {
  Partition partition;
  std::optional<std::size_t> highlighted;
};

ParsedPartition parse_partition(const std::string& text);
std::string format_partition(const Partition& p,
                             std::optional<std::size_t> highlighted = {});

// Image partition {pi(B) : B}; pi maps old element to new element, both
// 1-based (pi[i-1] = pi(i)). Highlight, when present, follows its block.
Partition apply_permutation(const Partition& p, const std::vector<int>& pi);
HighlightedPartition apply_permutation(const HighlightedPartition& p,
                                       const std::vector<int>& pi);

// Splitting at element i of the highlighted block B: B shrinks to B \ {i}
// and stays highlighted, {i} joins as a new singleton. Requires |B| >= 2.
HighlightedPartition split_off(const HighlightedPartition& p, int i);

inline Partition unhighlight(const HighlightedPartition& p) {
  return p.partition;
}

// All singletons {1}, ..., {n}.
Partition discrete_partition(int n);

int popcount_mask(std::uint64_t m);
std::vector<int> mask_elements(std::uint64_t m); // 1-based ascending

} // namespace qlb
