#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "qlb/orbit.hpp"
#include "qlb/phase.hpp"
#include "qlb/xvector.hpp"

namespace qlb {

// tau assigns each block of p the Z_q sum of sigma over that block; dense
// string in canonical block order, one char per block.
std::string transfer_sigma(const Partition& p, const std::string& sigma, int q);

// Key of a Y-side basis vector |member, tau>: 4-byte little-endian member
// id followed by the tau string.
std::string pack_ykey(std::uint32_t member, const std::string& tau);
std::pair<std::uint32_t, std::string> unpack_ykey(const std::string& key);

// Vector over Y = orbit members x block functions, tensored with the
// algorithm register: key -> dense dim(A) block.
struct YState {
  int dimA = 0;
  std::unordered_map<std::string, std::vector<cplx>> entries;

  double norm2() const;
  double norm() const;
  void prune();
  std::vector<cplx>& block(const std::string& key);
};

YState& add_scaled(YState& acc, const YState& other, cplx scale);
double max_entry_diff(const YState& a, const YState& b);

// Same Y register without the algorithm part, for operators acting on
// input-register vectors.
struct YXVector {
  std::unordered_map<std::string, cplx> amps;

  double norm2() const {
    double s = 0;
    for (const auto& [key, z] : amps) s += std::norm(z);
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }
  void prune() {
    for (auto it = amps.begin(); it != amps.end();)
      it = std::abs(it->second) <= kPruneTol ? amps.erase(it) : std::next(it);
  }
};

YXVector& add_scaled(YXVector& acc, const YXVector& other, cplx scale);
double max_entry_diff(const YXVector& a, const YXVector& b);

} // namespace qlb
