#include "qlb/ystate.hpp"

namespace qlb {

std::string transfer_sigma(const Partition& p, const std::string& sigma,
                           int q) {
  std::string tau(p.numBlocks(), '\0');
  for (std::size_t b = 0; b < p.numBlocks(); ++b) {
    int s = 0;
    for (int e : mask_elements(p.blocks[b]))
      s += sigma[static_cast<std::size_t>(e - 1)];
    tau[b] = static_cast<char>(s % q);
  }
  return tau;
}

std::string pack_ykey(std::uint32_t member, const std::string& tau) {
  std::string key(4, '\0');
  for (int b = 0; b < 4; ++b)
    key[static_cast<std::size_t>(b)] =
        static_cast<char>((member >> (8 * b)) & 0xff);
  return key + tau;
}

std::pair<std::uint32_t, std::string> unpack_ykey(const std::string& key) {
  std::uint32_t member = 0;
  for (int b = 0; b < 4; ++b)
    member |= static_cast<std::uint32_t>(
                  static_cast<unsigned char>(key[static_cast<std::size_t>(b)]))
              << (8 * b);
  return {member, key.substr(4)};
}

double YState::norm2() const {
  double s = 0;
  for (const auto& [key, blk] : entries)
    for (const cplx& z : blk) s += std::norm(z);
  return s;
}

double YState::norm() const { return std::sqrt(norm2()); }

void YState::prune() {
  for (auto it = entries.begin(); it != entries.end();) {
    bool any = false;
    for (cplx& z : it->second) {
      if (std::abs(z) <= kPruneTol)
        z = 0.0;
      else
        any = true;
    }
    it = any ? std::next(it) : entries.erase(it);
  }
}

std::vector<cplx>& YState::block(const std::string& key) {
  auto it = entries.find(key);
  if (it == entries.end())
    it = entries.emplace(key, std::vector<cplx>(static_cast<std::size_t>(dimA)))
             .first;
  return it->second;
}

YState& add_scaled(YState& acc, const YState& other, cplx scale) {
  for (const auto& [key, blk] : other.entries) {
    auto& dst = acc.block(key);
    for (std::size_t a = 0; a < blk.size(); ++a) dst[a] += scale * blk[a];
  }
  acc.prune();
  return acc;
}

double max_entry_diff(const YState& a, const YState& b) {
  double m = 0;
  const std::vector<cplx> zero(static_cast<std::size_t>(a.dimA));
  auto side = [&](const YState& x, const YState& y) {
    for (const auto& [key, blk] : x.entries) {
      auto it = y.entries.find(key);
      const std::vector<cplx>& other = it == y.entries.end() ? zero : it->second;
      for (std::size_t i = 0; i < blk.size(); ++i)
        m = std::max(m, std::abs(blk[i] - other[i]));
    }
  };
  side(a, b);
  side(b, a);
  return m;
}

YXVector& add_scaled(YXVector& acc, const YXVector& other, cplx scale) {
  for (const auto& [key, z] : other.amps) acc.amps[key] += scale * z;
  acc.prune();
  return acc;
}

double max_entry_diff(const YXVector& a, const YXVector& b) {
  double m = 0;
  for (const auto& [key, z] : a.amps) {
    auto it = b.amps.find(key);
    m = std::max(m, std::abs(z - (it == b.amps.end() ? cplx{0.0} : it->second)));
  }
  for (const auto& [key, z] : b.amps) {
    auto it = a.amps.find(key);
    m = std::max(m, std::abs(z - (it == a.amps.end() ? cplx{0.0} : it->second)));
  }
  return m;
}

} // namespace qlb
