#pragma once

#include "qlb/algorithm.hpp"
#include "qlb/xvector.hpp"

namespace qlb {

// Haar-distributed unitary: QR of a complex Ginibre matrix with the R
// diagonal phases absorbed into Q.
Eigen::MatrixXcd random_unitary(int dim, Rng& rng);

QueryAlgorithm random_algorithm(const ProblemDims& dims, int T, Rng& rng);

// All unitaries are the identity; the uniform run stays at chi_emptyset.
QueryAlgorithm identity_algorithm(const ProblemDims& dims, int T);

// Deterministic pointer-walk algorithm that queries cells 1..T in order
// with exponent 1: U_0 routes e_(1,0,0) to e_(1,1,0) and U_t (t >= 1) moves
// e_(t,1,0) to e_(t+1,1,0), so psi_t = chi_{1..t -> 1} (x) e_(t,1,0). Its
// per-step knowledge norms have closed forms, which the tests pin.
QueryAlgorithm blind_sequential_algorithm(const ProblemDims& dims, int T);

// Normalized vector supported on numSigmas distinct phase functions with
// |supp(sigma)| <= maxSupport, amplitudes complex Gaussian.
XVector random_xvector(int n, int q, int maxSupport, int numSigmas, Rng& rng);

// Same sparsity pattern rules, with a dense Gaussian algorithm block per
// drawn sigma.
SparseFourierState random_state(const ProblemDims& dims, int maxSupport,
                                int numSigmas, Rng& rng);

} // namespace qlb
