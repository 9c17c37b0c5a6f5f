#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "qlb/dims.hpp"
#include "qlb/phase.hpp"

namespace qlb {

// State of a query algorithm written in the phase-function basis of the
// input register: psi = sum_sigma |chi_sigma> (x) block[sigma], where each
// block is a dense dim(A) amplitude vector. Only sigmas with a nonzero
// block are stored; entries with |amp| <= kPruneTol are dropped by prune().
struct SparseFourierState {
  ProblemDims dims;
  std::unordered_map<std::string, std::vector<cplx>> blocks;

  double norm2() const;
  double norm() const;

  cplx amplitude(const std::string& sigma, int a) const;

  void prune();

  // Number of stored (sigma, a) amplitudes after pruning zeros.
  std::size_t entry_count() const;

  int max_support() const;

  std::vector<cplx>& block(const std::string& sigma);
};

// |chi_emptyset> (x) |e_0>: the uniform-input start state with the
// algorithm register in its first basis vector.
SparseFourierState uniform_initial_state(const ProblemDims& dims);

// Phase oracle conjugated into this basis: the (sigma, a) amplitude moves
// to (sigma + {i -> c}, a) where (i, c) are decoded from a.
SparseFourierState apply_oracle(const SparseFourierState& s);

// U acts on the algorithm register only; U is dim(A) x dim(A).
SparseFourierState apply_unitary(const SparseFourierState& s,
                                 const Eigen::MatrixXcd& U);

// Orthogonal projection onto span{chi_sigma : |supp(sigma)| <= t} (x) A.
SparseFourierState project_support_at_most(const SparseFourierState& s, int t);

SparseFourierState& add_scaled(SparseFourierState& acc,
                               const SparseFourierState& other, cplx scale);

double max_entry_diff(const SparseFourierState& a, const SparseFourierState& b);

} // namespace qlb
