#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace qlb {

using cplx = std::complex<double>;
using Rng = std::mt19937_64;

// Tolerance ladder: exact identities get the tightest slack, norm
// inequalities along trajectories a looser one, compounded pipelines the
// loosest. Values are part of the library contract and used by the
// acceptance suite as-is.
inline constexpr double kPruneTol = 1e-14;
inline constexpr double kExactTol = 1e-10;
inline constexpr double kTrajTol = 1e-9;
inline constexpr double kPipelineTol = 1e-8;
inline constexpr double kUnitaryTol = 1e-9;
inline constexpr double kRankTol = 1e-10;     // relative, on singular values
inline constexpr double kPowerIterTol = 1e-8; // relative change of the Rayleigh quotient
inline constexpr int kPowerIterCap = 10000;
inline constexpr std::size_t kDefaultOrbitCap = 2'000'000;
inline constexpr std::size_t kDefaultSubspaceCap = 4000;

// Thrown on malformed user input (config files, seed strings). CLI exit 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an instance exceeds a configured cap. CLI exit 3.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// q-th root of unity to the power e; e is reduced mod q first so the
// argument passed to polar stays in [0, 2*pi).
inline cplx omega_pow(int q, long long e) {
  long long r = e % q;
  if (r < 0) r += q;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                             static_cast<double>(q));
}

inline std::uint64_t binom_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

} // namespace qlb
