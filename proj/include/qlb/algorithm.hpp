#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qlb/state.hpp"

namespace qlb {

// A T-query algorithm is the product U_T O U_{T-1} ... O U_0 with each U_t
// acting on the algorithm register; unitaries has size T + 1.
struct QueryAlgorithm {
  ProblemDims dims;
  std::vector<Eigen::MatrixXcd> unitaries;

  int T() const { return static_cast<int>(unitaries.size()) - 1; }

  void validate() const;
};

// max |(U^H U - I)_{jk}|; zero for an exact unitary.
double unitarity_defect(const Eigen::MatrixXcd& U);

// Final measurement: each algorithm basis vector carries a response label
// in [0, numResponses).
struct Measurement {
  int numResponses = 0;
  std::vector<int> label; // size dim(A)
};

// psi[t] is the state before U_t, psiPrime[t] = U_t psi[t]; the oracle maps
// psiPrime[t] to psi[t+1]. Both vectors have size T + 1.
struct Trajectory {
  std::vector<SparseFourierState> psi;
  std::vector<SparseFourierState> psiPrime;
};

// Run on the uniform input superposition, i.e. start from chi_emptyset.
Trajectory run_uniform(const QueryAlgorithm& alg);

// Plain standard-basis run on one fixed input word x (values in [0, q)),
// for cross-checking the phase-function simulation.
Eigen::VectorXcd run_on_input(const QueryAlgorithm& alg,
                              const std::vector<int>& x);

// Probability that measuring run_on_input(alg, x) yields a label r with
// accept[r] true.
double success_probability_on_input(const QueryAlgorithm& alg,
                                    const std::vector<int>& x,
                                    const Measurement& m,
                                    const std::vector<char>& accept);

// coeff(sigma, a) = q^{-n} sum_x omega^{-<sigma, x>} psi_x[a]: inverse
// transform of the per-input final states; equals the phase-function-basis
// amplitudes of the uniform run.
cplx fourier_coefficient(const QueryAlgorithm& alg, const std::string& sigma,
                         int a, const std::vector<Eigen::VectorXcd>& perInput);

// All q^n input words in lexicographic order, x[0] fastest.
std::vector<std::vector<int>> all_inputs(int n, int q);

} // namespace qlb
