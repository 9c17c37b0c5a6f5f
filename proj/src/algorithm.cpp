#include "qlb/algorithm.hpp"

namespace qlb {

void QueryAlgorithm::validate() const {
  dims.validate();
  if (unitaries.empty()) throw ParseError("algorithm needs at least U_0");
  for (const auto& U : unitaries) {
    if (U.rows() != dims.dimA() || U.cols() != dims.dimA())
      throw ParseError("unitary dimension mismatch");
    if (unitarity_defect(U) > kUnitaryTol)
      throw ParseError("matrix is not unitary within tolerance");
  }
}

double unitarity_defect(const Eigen::MatrixXcd& U) {
  Eigen::MatrixXcd D = U.adjoint() * U;
  D.diagonal().array() -= 1.0;
  return D.cwiseAbs().maxCoeff();
}

Trajectory run_uniform(const QueryAlgorithm& alg) {
  Trajectory tr;
  const int T = alg.T();
  tr.psi.reserve(static_cast<std::size_t>(T) + 1);
  tr.psiPrime.reserve(static_cast<std::size_t>(T) + 1);
  tr.psi.push_back(uniform_initial_state(alg.dims));
  for (int t = 0; t <= T; ++t) {
    tr.psiPrime.push_back(apply_unitary(tr.psi.back(), alg.unitaries[static_cast<std::size_t>(t)]));
    if (t < T) tr.psi.push_back(apply_oracle(tr.psiPrime.back()));
  }
  return tr;
}

Eigen::VectorXcd run_on_input(const QueryAlgorithm& alg,
                              const std::vector<int>& x) {
  const auto dimA = static_cast<Eigen::Index>(alg.dims.dimA());
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dimA);
  v[0] = 1.0;
  const int T = alg.T();
  for (int t = 0; t <= T; ++t) {
    v = alg.unitaries[static_cast<std::size_t>(t)] * v;
    if (t == T) break;
    for (Eigen::Index a = 0; a < dimA; ++a) {
      const auto icw = alg.dims.decode(static_cast<int>(a));
      v[a] *= omega_pow(alg.dims.q,
                        static_cast<long long>(icw.c) * x[static_cast<std::size_t>(icw.i - 1)]);
    }
  }
  return v;
}

double success_probability_on_input(const QueryAlgorithm& alg,
                                    const std::vector<int>& x,
                                    const Measurement& m,
                                    const std::vector<char>& accept) {
  const Eigen::VectorXcd v = run_on_input(alg, x);
  double p = 0;
  for (Eigen::Index a = 0; a < v.size(); ++a)
    if (accept[static_cast<std::size_t>(m.label[static_cast<std::size_t>(a)])])
      p += std::norm(v[a]);
  return p;
}

std::vector<std::vector<int>> all_inputs(int n, int q) {
  std::vector<std::vector<int>> xs;
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  while (true) {
    xs.push_back(x);
    int i = 0;
    while (i < n && ++x[static_cast<std::size_t>(i)] == q) x[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return xs;
}

cplx fourier_coefficient(const QueryAlgorithm& alg, const std::string& sigma,
                         int a, const std::vector<Eigen::VectorXcd>& perInput) {
  const auto xs = all_inputs(alg.dims.n, alg.dims.q);
  cplx s = 0;
  for (std::size_t xi = 0; xi < xs.size(); ++xi)
    s += omega_pow(alg.dims.q, -pairing(sigma, xs[xi])) * perInput[xi][a];
  return s / std::pow(static_cast<double>(alg.dims.q), alg.dims.n);
}

} // namespace qlb
