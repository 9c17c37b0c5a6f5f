#include "qlb/partition.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace qlb {

int popcount_mask(std::uint64_t m) { return std::popcount(m); }

std::vector<int> mask_elements(std::uint64_t m) {
  std::vector<int> e;
  while (m) {
    e.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return e;
}

std::size_t Partition::blockOf(int i) const {
  const std::uint64_t bit = std::uint64_t{1} << (i - 1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (blocks[b] & bit) return b;
  throw ParseError("element outside partition ground set");
}

std::vector<int> Partition::sizes() const {
  std::vector<int> s;
  s.reserve(blocks.size());
  for (std::uint64_t b : blocks) s.push_back(std::popcount(b));
  std::sort(s.begin(), s.end());
  return s;
}

Partition Partition::from_blocks(int n, std::vector<std::uint64_t> blocks) {
  if (n < 1 || n > 64) throw ParseError("partition ground set must be [1, 64]");
  std::uint64_t seen = 0;
  for (std::uint64_t b : blocks) {
    if (!b) throw ParseError("empty partition block");
    if (b & seen) throw ParseError("partition blocks overlap");
    seen |= b;
  }
  const std::uint64_t full =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if (seen != full) throw ParseError("partition does not cover [1..n]");
  std::sort(blocks.begin(), blocks.end(),
            [](std::uint64_t a, std::uint64_t b) {
              return std::countr_zero(a) < std::countr_zero(b);
            });
  return Partition{n, std::move(blocks)};
}

ParsedPartition parse_partition(const std::string& text) {
  std::vector<std::uint64_t> blocks;
  std::optional<std::uint64_t> highlightedMask;
  int maxElem = 0;

  std::stringstream ss(text);
  std::string blockText;
  while (std::getline(ss, blockText, '/')) {
    bool starred = false;
    std::size_t pos = 0;
    if (!blockText.empty() && blockText[0] == '*') {
      starred = true;
      pos = 1;
    }
    std::uint64_t mask = 0;
    std::stringstream bs(blockText.substr(pos));
    std::string elemText;
    while (std::getline(bs, elemText, ',')) {
      std::size_t used = 0;
      int e = 0;
      try {
        e = std::stoi(elemText, &used);
      } catch (const std::exception&) {
        throw ParseError("bad partition element '" + elemText + "'");
      }
      if (used != elemText.size() || e < 1 || e > 64)
        throw ParseError("bad partition element '" + elemText + "'");
      mask |= std::uint64_t{1} << (e - 1);
      maxElem = std::max(maxElem, e);
    }
    if (!mask) throw ParseError("empty block in partition text");
    if (starred) {
      if (highlightedMask) throw ParseError("more than one highlighted block");
      highlightedMask = mask;
    }
    blocks.push_back(mask);
  }
  if (blocks.empty()) throw ParseError("empty partition text");

  ParsedPartition out;
  out.partition = Partition::from_blocks(maxElem, std::move(blocks));
  if (highlightedMask) {
    for (std::size_t b = 0; b < out.partition.blocks.size(); ++b)
      if (out.partition.blocks[b] == *highlightedMask) out.highlighted = b;
  }
  return out;
}

std::string format_partition(const Partition& p,
                             std::optional<std::size_t> highlighted) {
  std::string out;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) out += '/';
    if (highlighted && *highlighted == b) out += '*';
    bool first = true;
    for (int e : mask_elements(p.blocks[b])) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(e);
    }
  }
  return out;
}

Partition apply_permutation(const Partition& p, const std::vector<int>& pi) {
  std::vector<std::uint64_t> blocks;
  blocks.reserve(p.blocks.size());
  for (std::uint64_t b : p.blocks) {
    std::uint64_t img = 0;
    for (int e : mask_elements(b))
      img |= std::uint64_t{1} << (pi[static_cast<std::size_t>(e - 1)] - 1);
    blocks.push_back(img);
  }
  return Partition::from_blocks(p.n, std::move(blocks));
}

HighlightedPartition apply_permutation(const HighlightedPartition& p,
                                       const std::vector<int>& pi) {
  std::uint64_t hi = 0;
  for (int e : mask_elements(p.highlighted_mask()))
    hi |= std::uint64_t{1} << (pi[static_cast<std::size_t>(e - 1)] - 1);
  Partition img = apply_permutation(p.partition, pi);
  for (std::size_t b = 0; b < img.blocks.size(); ++b)
    if (img.blocks[b] == hi) return HighlightedPartition{img, b};
  throw ParseError("highlight lost under permutation");
}

HighlightedPartition split_off(const HighlightedPartition& p, int i) {
  const std::uint64_t bit = std::uint64_t{1} << (i - 1);
  const std::uint64_t hi = p.highlighted_mask();
  if (!(hi & bit)) throw ParseError("split element not in highlighted block");
  if (std::popcount(hi) < 2) throw ParseError("cannot split a singleton");
  std::vector<std::uint64_t> blocks = p.partition.blocks;
  blocks[p.highlighted] = hi ^ bit;
  blocks.push_back(bit);
  Partition img = Partition::from_blocks(p.partition.n, std::move(blocks));
  for (std::size_t b = 0; b < img.blocks.size(); ++b)
    if (img.blocks[b] == (hi ^ bit)) return HighlightedPartition{img, b};
  throw ParseError("highlight lost under split");
}

Partition discrete_partition(int n) {
  std::vector<std::uint64_t> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) blocks.push_back(std::uint64_t{1} << i);
  return Partition::from_blocks(n, std::move(blocks));
}

} // namespace qlb
