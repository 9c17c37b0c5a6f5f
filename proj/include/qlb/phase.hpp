#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qlb/util.hpp"

namespace qlb {

// A phase function sigma maps cells [1..n] to Z_q. Stored dense as a
// length-n byte string (char value = exponent), which doubles as a hash map
// key; cells outside the support hold 0.
class PhaseFunction {
public:
  PhaseFunction() = default;
  explicit PhaseFunction(int n) : v_(static_cast<std::size_t>(n), '\0') {}
  explicit PhaseFunction(std::string raw) : v_(std::move(raw)) {}

  static PhaseFunction empty(int n) { return PhaseFunction(n); }

  int n() const { return static_cast<int>(v_.size()); }
  int value(int i) const { return v_[static_cast<std::size_t>(i - 1)]; }

  // sigma(i) += c mod q; a zero result drops i from the support.
  void add(int i, int c, int q) {
    auto& ch = v_[static_cast<std::size_t>(i - 1)];
    ch = static_cast<char>((ch + c) % q);
  }

  int support_size() const {
    int s = 0;
    for (char ch : v_) s += (ch != 0);
    return s;
  }

  std::uint64_t support_mask() const {
    std::uint64_t m = 0;
    for (std::size_t b = 0; b < v_.size(); ++b)
      if (v_[b]) m |= std::uint64_t{1} << b;
    return m;
  }

  // Nonzero entries as (cell, value), cell 1-based ascending.
  std::vector<std::pair<int, int>> entries() const {
    std::vector<std::pair<int, int>> e;
    for (std::size_t b = 0; b < v_.size(); ++b)
      if (v_[b]) e.emplace_back(static_cast<int>(b) + 1, v_[b]);
    return e;
  }

  const std::string& raw() const { return v_; }
  std::string& raw() { return v_; }

  bool operator==(const PhaseFunction& o) const { return v_ == o.v_; }

private:
  std::string v_;
};

// Free helpers on the raw dense representation; hot paths keep sigma as a
// plain string to avoid wrapper churn in map lookups.
inline int support_size(const std::string& sigma) {
  int s = 0;
  for (char ch : sigma) s += (ch != 0);
  return s;
}

inline std::uint64_t support_mask(const std::string& sigma) {
  std::uint64_t m = 0;
  for (std::size_t b = 0; b < sigma.size(); ++b)
    if (sigma[b]) m |= std::uint64_t{1} << b;
  return m;
}

// <sigma, x> = sum_i sigma(i) * x_i, the exponent pairing a phase function
// against an input word.
inline long long pairing(const std::string& sigma, const std::vector<int>& x) {
  long long s = 0;
  for (std::size_t b = 0; b < sigma.size(); ++b)
    s += static_cast<long long>(sigma[b]) * x[b];
  return s;
}

} // namespace qlb
