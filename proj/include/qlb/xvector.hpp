#pragma once

#include <string>
#include <unordered_map>

#include "qlb/phase.hpp"

namespace qlb {

// A vector over the input register alone, phi = sum_sigma amps[sigma]
// |chi_sigma>, with no algorithm register attached. Used by the operator
// identities and spectral routines that act on X directly.
struct XVector {
  int n = 0;
  int q = 0;
  std::unordered_map<std::string, cplx> amps;

  double norm2() const {
    double s = 0;
    for (const auto& [sigma, z] : amps) s += std::norm(z);
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }

  void prune() {
    for (auto it = amps.begin(); it != amps.end();)
      it = std::abs(it->second) <= kPruneTol ? amps.erase(it) : std::next(it);
  }

  void scale(cplx c) {
    for (auto& [sigma, z] : amps) z *= c;
  }

  int max_support() const {
    int m = 0;
    for (const auto& [sigma, z] : amps) m = std::max(m, support_size(sigma));
    return m;
  }
};

// O_{i,c} on the input register: in this basis it shifts sigma(i) by c.
inline XVector apply_oracle_x(const XVector& v, int i, int c) {
  XVector out{v.n, v.q, {}};
  for (const auto& [sigma, z] : v.amps) {
    std::string tau = sigma;
    auto& ch = tau[static_cast<std::size_t>(i - 1)];
    ch = static_cast<char>((ch + c) % v.q);
    out.amps[tau] += z;
  }
  out.prune();
  return out;
}

inline XVector& add_scaled(XVector& acc, const XVector& other, cplx scale) {
  for (const auto& [sigma, z] : other.amps) acc.amps[sigma] += scale * z;
  acc.prune();
  return acc;
}

} // namespace qlb
