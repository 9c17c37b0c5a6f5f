#include "qlb/transfer.hpp"

#include <algorithm>
#include <cmath>

namespace qlb {

namespace {

// Shared core: accumulate weight * (selected transfer image of s under
// member m) into out.
void accumulate_member(YState& out, const SparseFourierState& s,
                       const PartitionOrbit& M, std::size_t m, Selector sel,
                       double weight) {
  const Partition& p = M.part(m);
  const int hi = M.hi(m);
  for (const auto& [sigma, blk] : s.blocks) {
    if (!selector_keeps(sel, M.knowledge, p, hi, support_mask(sigma))) continue;
    const std::string key =
        pack_ykey(static_cast<std::uint32_t>(m), transfer_sigma(p, sigma, s.dims.q));
    auto& dst = out.block(key);
    for (std::size_t a = 0; a < blk.size(); ++a) dst[a] += weight * blk[a];
  }
}

} // namespace

YState apply_transfer(const SparseFourierState& s, const PartitionOrbit& M,
                      Selector sel) {
  YState out{s.dims.dimA(), {}};
  const double weight = 1.0 / std::sqrt(static_cast<double>(M.size()));
  for (std::size_t m = 0; m < M.size(); ++m)
    accumulate_member(out, s, M, m, sel, weight);
  out.prune();
  return out;
}

YState apply_transfer_mu(const SparseFourierState& s, const PartitionOrbit& M,
                         std::size_t m, Selector sel) {
  YState out{s.dims.dimA(), {}};
  accumulate_member(out, s, M, m, sel, 1.0);
  out.prune();
  return out;
}

YState apply_boundary(const SparseFourierState& s, const PartitionOrbit& M,
                      const ProblemDims& dims) {
  YState out{dims.dimA(), {}};
  const double weight = 1.0 / std::sqrt(static_cast<double>(M.size()));
  for (std::size_t m = 0; m < M.size(); ++m) {
    const Partition& p = M.part(m);
    const int hi = M.hi(m);
    for (const auto& [sigma, blk] : s.blocks) {
      const std::uint64_t S = support_mask(sigma);
      const std::string tau = transfer_sigma(p, sigma, dims.q);
      std::vector<cplx>* dst = nullptr;
      for (std::size_t a = 0; a < blk.size(); ++a) {
        if (std::abs(blk[a]) <= kPruneTol) continue;
        const int i = dims.decode(static_cast<int>(a)).i;
        if (!in_boundary(M.knowledge, p, hi, S, i)) continue;
        if (!dst)
          dst = &out.block(pack_ykey(static_cast<std::uint32_t>(m), tau));
        (*dst)[a] += weight * blk[a];
      }
    }
  }
  out.prune();
  return out;
}

YState apply_xi(const YState& y, const PartitionOrbit& M,
                const ProblemDims& dims) {
  YState out{y.dimA, {}};
  for (const auto& [key, blk] : y.entries) {
    const std::uint32_t m = unpack_ykey(key).first;
    const std::uint64_t hiMask =
        M.part(m).blocks[static_cast<std::size_t>(M.hi(m))];
    std::vector<cplx>* dst = nullptr;
    for (std::size_t a = 0; a < blk.size(); ++a) {
      if (std::abs(blk[a]) <= kPruneTol) continue;
      const int i = dims.decode(static_cast<int>(a)).i;
      if (!(hiMask & (std::uint64_t{1} << (i - 1)))) continue;
      if (!dst) dst = &out.block(key);
      (*dst)[a] += blk[a];
    }
  }
  out.prune();
  return out;
}

YState apply_oracle_y(const YState& y, const PartitionOrbit& M,
                      const ProblemDims& dims) {
  YState out{y.dimA, {}};
  for (const auto& [key, blk] : y.entries) {
    const auto [m, tau] = unpack_ykey(key);
    const Partition& p = M.part(m);
    for (std::size_t a = 0; a < blk.size(); ++a) {
      if (std::abs(blk[a]) <= kPruneTol) continue;
      const auto icw = dims.decode(static_cast<int>(a));
      std::string tau2 = tau;
      auto& ch = tau2[p.blockOf(icw.i)];
      ch = static_cast<char>((ch + icw.c) % dims.q);
      out.block(pack_ykey(m, tau2))[a] += blk[a];
    }
  }
  out.prune();
  return out;
}

YXVector yx_transfer(const XVector& v, const PartitionOrbit& M, Selector sel) {
  YXVector out;
  const double weight = 1.0 / std::sqrt(static_cast<double>(M.size()));
  for (std::size_t m = 0; m < M.size(); ++m) {
    const Partition& p = M.part(m);
    const int hi = M.hi(m);
    for (const auto& [sigma, z] : v.amps) {
      if (!selector_keeps(sel, M.knowledge, p, hi, support_mask(sigma)))
        continue;
      out.amps[pack_ykey(static_cast<std::uint32_t>(m),
                         transfer_sigma(p, sigma, v.q))] += weight * z;
    }
  }
  out.prune();
  return out;
}

YXVector yx_transfer_mu(const XVector& v, const PartitionOrbit& M,
                        std::size_t m, Selector sel) {
  YXVector out;
  const Partition& p = M.part(m);
  const int hi = M.hi(m);
  for (const auto& [sigma, z] : v.amps) {
    if (!selector_keeps(sel, M.knowledge, p, hi, support_mask(sigma))) continue;
    out.amps[pack_ykey(static_cast<std::uint32_t>(m),
                       transfer_sigma(p, sigma, v.q))] += z;
  }
  out.prune();
  return out;
}

YXVector yx_transfer_part(const XVector& v, const Partition& p, int hiIdx,
                          const KnowledgeSystem& ks, Selector sel) {
  YXVector out;
  for (const auto& [sigma, z] : v.amps) {
    if (!selector_keeps(sel, ks, p, hiIdx, support_mask(sigma))) continue;
    out.amps[pack_ykey(0, transfer_sigma(p, sigma, v.q))] += z;
  }
  out.prune();
  return out;
}

YXVector yx_oracle(const YXVector& y, const PartitionOrbit& M, int i, int c,
                   int q) {
  YXVector out;
  for (const auto& [key, z] : y.amps) {
    const auto [m, tau] = unpack_ykey(key);
    std::string tau2 = tau;
    auto& ch = tau2[M.part(m).blockOf(i)];
    ch = static_cast<char>((ch + c) % q);
    out.amps[pack_ykey(m, tau2)] += z;
  }
  out.prune();
  return out;
}

cplx beta_sum(const XVector& phi, const Partition& p, int hiIdx,
              const KnowledgeSystem& ks, Selector sel, const std::string& tau) {
  cplx s = 0;
  for (const auto& [sigma, z] : phi.amps) {
    if (transfer_sigma(p, sigma, phi.q) != tau) continue;
    if (!selector_keeps(sel, ks, p, hiIdx, support_mask(sigma))) continue;
    s += z;
  }
  return s;
}

ResponseSet ResponseSet::k_subsets(int n, int k) {
  ResponseSet rs{n, k, {}};
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    rs.masks.push_back(mask);
    // Gosper's hack: next subset of the same popcount.
    const std::uint64_t c = mask & -mask;
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return rs;
}

std::size_t ResponseSet::index_of(std::uint64_t mask) const {
  auto it = std::lower_bound(masks.begin(), masks.end(), mask);
  if (it == masks.end() || *it != mask)
    throw ParseError("mask is not a response");
  return static_cast<std::size_t>(it - masks.begin());
}

bool ResponseSet::member_matches(const PartitionOrbit& M, std::size_t m,
                                 std::size_t r) const {
  const std::uint64_t rho = masks[r];
  if (M.highlighted)
    return M.part(m).blocks[static_cast<std::size_t>(M.hi(m))] == rho;
  const auto& blocks = M.part(m).blocks;
  return std::find(blocks.begin(), blocks.end(), rho) != blocks.end();
}

YState project_response(const YState& y, const PartitionOrbit& M,
                        const ResponseSet& rs, std::size_t r) {
  YState out{y.dimA, {}};
  for (const auto& [key, blk] : y.entries)
    if (rs.member_matches(M, unpack_ykey(key).first, r))
      out.entries.emplace(key, blk);
  return out;
}

double success_probability(const YState& y, const PartitionOrbit& M,
                           const Measurement& meas, const ResponseSet& rs) {
  double p = 0;
  for (const auto& [key, blk] : y.entries) {
    const std::uint32_t m = unpack_ykey(key).first;
    for (std::size_t a = 0; a < blk.size(); ++a) {
      if (blk[a] == cplx{0.0}) continue;
      const auto r = static_cast<std::size_t>(meas.label[a]);
      if (rs.member_matches(M, m, r)) p += std::norm(blk[a]);
    }
  }
  return p;
}

} // namespace qlb
