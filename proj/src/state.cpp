#include "qlb/state.hpp"

#include <algorithm>
#include <cmath>

namespace qlb {

double SparseFourierState::norm2() const {
  double s = 0;
  for (const auto& [sigma, blk] : blocks)
    for (const cplx& z : blk) s += std::norm(z);
  return s;
}

double SparseFourierState::norm() const { return std::sqrt(norm2()); }

cplx SparseFourierState::amplitude(const std::string& sigma, int a) const {
  auto it = blocks.find(sigma);
  if (it == blocks.end()) return 0.0;
  return it->second[static_cast<std::size_t>(a)];
}

void SparseFourierState::prune() {
  for (auto it = blocks.begin(); it != blocks.end();) {
    bool any = false;
    for (cplx& z : it->second) {
      if (std::abs(z) <= kPruneTol)
        z = 0.0;
      else
        any = true;
    }
    it = any ? std::next(it) : blocks.erase(it);
  }
}

std::size_t SparseFourierState::entry_count() const {
  std::size_t c = 0;
  for (const auto& [sigma, blk] : blocks)
    for (const cplx& z : blk) c += (z != cplx{0.0});
  return c;
}

int SparseFourierState::max_support() const {
  int m = 0;
  for (const auto& [sigma, blk] : blocks) m = std::max(m, support_size(sigma));
  return m;
}

std::vector<cplx>& SparseFourierState::block(const std::string& sigma) {
  auto it = blocks.find(sigma);
  if (it == blocks.end())
    it = blocks.emplace(sigma, std::vector<cplx>(dims.dimA(), cplx{0.0})).first;
  return it->second;
}

SparseFourierState uniform_initial_state(const ProblemDims& dims) {
  SparseFourierState s{dims, {}};
  s.block(std::string(static_cast<std::size_t>(dims.n), '\0'))[0] = 1.0;
  return s;
}

SparseFourierState apply_oracle(const SparseFourierState& s) {
  SparseFourierState out{s.dims, {}};
  const int q = s.dims.q, dimW = s.dims.dimW;
  for (const auto& [sigma, blk] : s.blocks) {
    // Group a-indices by their (i, c) pair: each pair shifts sigma once.
    for (int i = 1; i <= s.dims.n; ++i) {
      for (int c = 0; c < q; ++c) {
        std::string tau = sigma;
        auto& ch = tau[static_cast<std::size_t>(i - 1)];
        ch = static_cast<char>((ch + c) % q);
        std::vector<cplx>* dst = nullptr;
        for (int w = 0; w < dimW; ++w) {
          const int a = s.dims.algIndex(i, c, w);
          const cplx z = blk[static_cast<std::size_t>(a)];
          if (std::abs(z) <= kPruneTol) continue;
          if (!dst) dst = &out.block(tau);
          (*dst)[static_cast<std::size_t>(a)] += z;
        }
      }
    }
  }
  out.prune();
  return out;
}

SparseFourierState apply_unitary(const SparseFourierState& s,
                                 const Eigen::MatrixXcd& U) {
  SparseFourierState out{s.dims, {}};
  const auto dimA = static_cast<Eigen::Index>(s.dims.dimA());
  for (const auto& [sigma, blk] : s.blocks) {
    Eigen::Map<const Eigen::VectorXcd> v(blk.data(), dimA);
    std::vector<cplx> res(static_cast<std::size_t>(dimA));
    Eigen::Map<Eigen::VectorXcd>(res.data(), dimA) = U * v;
    out.blocks.emplace(sigma, std::move(res));
  }
  out.prune();
  return out;
}

SparseFourierState project_support_at_most(const SparseFourierState& s, int t) {
  SparseFourierState out{s.dims, {}};
  for (const auto& [sigma, blk] : s.blocks)
    if (support_size(sigma) <= t) out.blocks.emplace(sigma, blk);
  return out;
}

SparseFourierState& add_scaled(SparseFourierState& acc,
                               const SparseFourierState& other, cplx scale) {
  for (const auto& [sigma, blk] : other.blocks) {
    auto& dst = acc.block(sigma);
    for (std::size_t a = 0; a < blk.size(); ++a) dst[a] += scale * blk[a];
  }
  acc.prune();
  return acc;
}

double max_entry_diff(const SparseFourierState& a, const SparseFourierState& b) {
  double m = 0;
  const std::vector<cplx> zero(static_cast<std::size_t>(a.dims.dimA()),
                               cplx{0.0});
  auto side = [&](const SparseFourierState& x, const SparseFourierState& y) {
    for (const auto& [sigma, blk] : x.blocks) {
      auto it = y.blocks.find(sigma);
      const std::vector<cplx>& other = it == y.blocks.end() ? zero : it->second;
      for (std::size_t i = 0; i < blk.size(); ++i)
        m = std::max(m, std::abs(blk[i] - other[i]));
    }
  };
  side(a, b);
  side(b, a);
  return m;
}

} // namespace qlb
