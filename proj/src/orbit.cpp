#include "qlb/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qlb {

namespace {

double log_orbit_size(int n, const std::vector<int>& sizes, int highlightSize) {
  double lg = std::lgamma(n + 1.0);
  std::map<int, int> mult;
  for (int s : sizes) {
    lg -= std::lgamma(s + 1.0);
    ++mult[s];
  }
  for (const auto& [s, m] : mult) lg -= std::lgamma(m + 1.0);
  if (highlightSize > 0) lg += std::log(static_cast<double>(mult.at(highlightSize)));
  return lg;
}

} // namespace

std::uint64_t orbit_size_formula(int n, const std::vector<int>& sizes,
                                 int highlightSize) {
  int total = 0;
  for (int s : sizes) total += s;
  if (total != n) throw ParseError("block sizes do not sum to n");

  // Guard with a log estimate before exact arithmetic; 2^61 leaves room for
  // the intermediate binomial products, which never exceed the final value.
  if (log_orbit_size(n, sizes, highlightSize) > 61.0 * std::numbers::ln2)
    throw CapExceeded("orbit size exceeds representable range");

  std::vector<int> desc = sizes;
  std::sort(desc.rbegin(), desc.rend());
  std::uint64_t count = 1;
  int remaining = n;
  for (int s : desc) {
    count *= binom_u64(remaining, s);
    remaining -= s;
  }
  std::map<int, int> mult;
  for (int s : sizes) ++mult[s];
  for (const auto& [s, m] : mult) {
    std::uint64_t f = 1;
    for (int j = 2; j <= m; ++j) f *= static_cast<std::uint64_t>(j);
    count /= f;
  }
  if (highlightSize > 0)
    count *= static_cast<std::uint64_t>(mult.at(highlightSize));
  return count;
}

namespace {

void enumerate(int n, std::uint64_t unassigned, std::map<int, int>& need,
               std::vector<std::uint64_t>& current,
               std::vector<Partition>& out) {
  if (!unassigned) {
    out.push_back(Partition{n, current});
    return;
  }
  const int lowBit = std::countr_zero(unassigned);
  const std::uint64_t anchor = std::uint64_t{1} << lowBit;
  const std::uint64_t rest = unassigned ^ anchor;
  const std::vector<int> restElems = mask_elements(rest);

  for (auto& [s, cnt] : need) {
    if (!cnt) continue;
    --cnt;
    // Choose the s - 1 companions of the anchor element from the remaining
    // elements; combinations in lexicographic index order.
    const int pick = s - 1;
    const int m = static_cast<int>(restElems.size());
    std::vector<int> idx(static_cast<std::size_t>(pick));
    for (int j = 0; j < pick; ++j) idx[static_cast<std::size_t>(j)] = j;
    bool more = pick <= m;
    while (more) {
      std::uint64_t block = anchor;
      for (int j : idx)
        block |= std::uint64_t{1}
                 << (restElems[static_cast<std::size_t>(j)] - 1);
      current.push_back(block);
      enumerate(n, unassigned & ~block, need, current, out);
      current.pop_back();
      if (pick == 0) break;
      int j = pick - 1;
      while (j >= 0 && idx[static_cast<std::size_t>(j)] == m - pick + j) --j;
      if (j < 0) {
        more = false;
      } else {
        ++idx[static_cast<std::size_t>(j)];
        for (int l = j + 1; l < pick; ++l)
          idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
      }
    }
    ++cnt;
  }
}

std::vector<Partition> enumerate_orbit(const Partition& seed, std::size_t cap) {
  const std::vector<int> sizes = seed.sizes();
  const std::uint64_t total = orbit_size_formula(seed.n, sizes, 0);
  if (total > cap)
    throw CapExceeded("orbit size " + std::to_string(total) + " exceeds cap " +
                      std::to_string(cap));
  std::map<int, int> need;
  for (int s : sizes) ++need[s];
  std::vector<Partition> out;
  out.reserve(total);
  std::vector<std::uint64_t> current;
  const std::uint64_t full = seed.n == 64 ? ~std::uint64_t{0}
                                          : (std::uint64_t{1} << seed.n) - 1;
  enumerate(seed.n, full, need, current, out);
  for (auto& p : out)
    p = Partition::from_blocks(p.n, std::move(p.blocks));
  std::sort(out.begin(), out.end(),
            [](const Partition& a, const Partition& b) {
              return a.blocks < b.blocks;
            });
  return out;
}

} // namespace

PartitionOrbit orbit_of(const Partition& seed, KnowledgeSystem ks,
                        std::size_t cap) {
  PartitionOrbit orbit;
  orbit.knowledge = ks;
  orbit.highlighted = false;
  orbit.members = enumerate_orbit(seed, cap);
  return orbit;
}

PartitionOrbit orbit_of(const HighlightedPartition& seed, KnowledgeSystem ks,
                        std::size_t cap) {
  const int hiSize = popcount_mask(seed.highlighted_mask());
  const std::uint64_t total =
      orbit_size_formula(seed.partition.n, seed.partition.sizes(), hiSize);
  if (total > cap)
    throw CapExceeded("orbit size " + std::to_string(total) + " exceeds cap " +
                      std::to_string(cap));

  PartitionOrbit orbit;
  orbit.knowledge = ks;
  orbit.highlighted = true;
  for (const Partition& p : enumerate_orbit(seed.partition, cap)) {
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      if (popcount_mask(p.blocks[b]) != hiSize) continue;
      orbit.members.push_back(p);
      orbit.highlightIdx.push_back(static_cast<int>(b));
    }
  }
  return orbit;
}

std::size_t member_index(const PartitionOrbit& orbit, const Partition& p,
                         int highlightIdx) {
  auto lo = std::lower_bound(
      orbit.members.begin(), orbit.members.end(), p,
      [](const Partition& a, const Partition& b) { return a.blocks < b.blocks; });
  for (; lo != orbit.members.end() && lo->blocks == p.blocks; ++lo) {
    const auto m = static_cast<std::size_t>(lo - orbit.members.begin());
    if (!orbit.highlighted || orbit.highlightIdx[m] == highlightIdx) return m;
  }
  throw ParseError("partition is not an orbit member");
}

} // namespace qlb
