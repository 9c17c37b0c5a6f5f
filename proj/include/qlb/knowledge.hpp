#pragma once

#include "qlb/partition.hpp"

namespace qlb {

// A knowledge system assigns each (partition, highlight) a monotone family
// L+ of subsets of [n]; L- is its complement and the i-boundary holds the
// sets that enter L+ exactly when i is added.
struct KnowledgeSystem {
  enum class Flavor {
    None,                 // no knowledge split, only the full transfer map
    IntersectionAtLeastK, // S in L+ iff some block B has |S cap B| >= k
    HighlightedSuperset,  // S in L+ iff S contains the highlighted block
  };

  Flavor flavor = Flavor::None;
  int k = 0; // threshold for IntersectionAtLeastK

  static KnowledgeSystem none() { return {Flavor::None, 0}; }
  static KnowledgeSystem intersection_at_least(int k) {
    return {Flavor::IntersectionAtLeastK, k};
  }
  static KnowledgeSystem highlighted_superset() {
    return {Flavor::HighlightedSuperset, 0};
  }
};

// highlightIdx = -1 means no highlighted block (only valid for flavors that
// ignore it).
inline bool in_plus(const KnowledgeSystem& ks, const Partition& p,
                    int highlightIdx, std::uint64_t S) {
  switch (ks.flavor) {
    case KnowledgeSystem::Flavor::IntersectionAtLeastK:
      for (std::uint64_t b : p.blocks)
        if (popcount_mask(b & S) >= ks.k) return true;
      return false;
    case KnowledgeSystem::Flavor::HighlightedSuperset: {
      const std::uint64_t hi =
          p.blocks[static_cast<std::size_t>(highlightIdx)];
      return (S & hi) == hi;
    }
    case KnowledgeSystem::Flavor::None:
      break;
  }
  throw std::logic_error("knowledge query on flavor None");
}

// S is on the i-boundary iff S itself is outside L+ but S with i added is
// inside. Sets already containing i are never on the boundary.
inline bool in_boundary(const KnowledgeSystem& ks, const Partition& p,
                        int highlightIdx, std::uint64_t S, int i) {
  const std::uint64_t bit = std::uint64_t{1} << (i - 1);
  if (S & bit) return false;
  return !in_plus(ks, p, highlightIdx, S) &&
         in_plus(ks, p, highlightIdx, S | bit);
}

// Which slice of a transfer image an operator keeps.
struct Selector {
  enum class Kind { Transfer, Plus, Minus, Boundary };
  Kind kind = Kind::Transfer;
  int i = 0; // boundary cell, 1-based, Kind::Boundary only

  static Selector transfer() { return {Kind::Transfer, 0}; }
  static Selector plus() { return {Kind::Plus, 0}; }
  static Selector minus() { return {Kind::Minus, 0}; }
  static Selector boundary(int i) { return {Kind::Boundary, i}; }
};

inline bool selector_keeps(const Selector& sel, const KnowledgeSystem& ks,
                           const Partition& p, int highlightIdx,
                           std::uint64_t S) {
  switch (sel.kind) {
    case Selector::Kind::Transfer: return true;
    case Selector::Kind::Plus: return in_plus(ks, p, highlightIdx, S);
    case Selector::Kind::Minus: return !in_plus(ks, p, highlightIdx, S);
    case Selector::Kind::Boundary:
      return in_boundary(ks, p, highlightIdx, S, sel.i);
  }
  throw std::logic_error("bad selector");
}

} // namespace qlb
