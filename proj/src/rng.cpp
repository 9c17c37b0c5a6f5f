#include "qlb/rng.hpp"

#include <algorithm>
#include <numeric>

namespace qlb {

Eigen::MatrixXcd random_unitary(int dim, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd G(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) G(i, j) = cplx{g(rng), g(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
  Eigen::MatrixXcd Q = qr.householderQ();
  const Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const cplx d = R(j, j);
    Q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : cplx{1.0};
  }
  return Q;
}

QueryAlgorithm random_algorithm(const ProblemDims& dims, int T, Rng& rng) {
  QueryAlgorithm alg{dims, {}};
  alg.unitaries.reserve(static_cast<std::size_t>(T) + 1);
  for (int t = 0; t <= T; ++t)
    alg.unitaries.push_back(random_unitary(dims.dimA(), rng));
  return alg;
}

QueryAlgorithm identity_algorithm(const ProblemDims& dims, int T) {
  QueryAlgorithm alg{dims, {}};
  alg.unitaries.assign(static_cast<std::size_t>(T) + 1,
                       Eigen::MatrixXcd::Identity(dims.dimA(), dims.dimA()));
  return alg;
}

namespace {

Eigen::MatrixXcd transposition(int dim, int a, int b) {
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(dim, dim);
  U(a, a) = U(b, b) = 0.0;
  U(a, b) = U(b, a) = 1.0;
  return U;
}

} // namespace

QueryAlgorithm blind_sequential_algorithm(const ProblemDims& dims, int T) {
  if (T >= dims.n)
    throw ParseError("blind sequential walk needs T < n");
  QueryAlgorithm alg{dims, {}};
  const int dimA = dims.dimA();
  alg.unitaries.push_back(
      transposition(dimA, dims.algIndex(1, 0, 0), dims.algIndex(1, 1, 0)));
  for (int t = 1; t < T; ++t)
    alg.unitaries.push_back(transposition(dimA, dims.algIndex(t, 1, 0),
                                          dims.algIndex(t + 1, 1, 0)));
  if (T >= 1) alg.unitaries.push_back(Eigen::MatrixXcd::Identity(dimA, dimA));
  return alg;
}

namespace {

// Distinct phase functions with bounded support, uniformly drawn shape.
std::vector<std::string> draw_sigmas(int n, int q, int maxSupport,
                                     int numSigmas, Rng& rng) {
  std::vector<std::string> out;
  std::uniform_int_distribution<int> supp(0, maxSupport);
  std::uniform_int_distribution<int> cell(0, n - 1);
  std::uniform_int_distribution<int> val(1, q - 1);
  while (static_cast<int>(out.size()) < numSigmas) {
    std::string sigma(static_cast<std::size_t>(n), '\0');
    const int s = supp(rng);
    for (int j = 0; j < s; ++j)
      sigma[static_cast<std::size_t>(cell(rng))] = static_cast<char>(val(rng));
    if (std::find(out.begin(), out.end(), sigma) == out.end())
      out.push_back(sigma);
  }
  return out;
}

} // namespace

XVector random_xvector(int n, int q, int maxSupport, int numSigmas, Rng& rng) {
  XVector v{n, q, {}};
  std::normal_distribution<double> g(0.0, 1.0);
  for (auto& sigma : draw_sigmas(n, q, maxSupport, numSigmas, rng))
    v.amps[sigma] = cplx{g(rng), g(rng)};
  v.scale(1.0 / v.norm());
  return v;
}

SparseFourierState random_state(const ProblemDims& dims, int maxSupport,
                                int numSigmas, Rng& rng) {
  SparseFourierState s{dims, {}};
  std::normal_distribution<double> g(0.0, 1.0);
  for (auto& sigma : draw_sigmas(dims.n, dims.q, maxSupport, numSigmas, rng)) {
    auto& blk = s.block(sigma);
    for (auto& z : blk) z = cplx{g(rng), g(rng)};
  }
  const double nrm = s.norm();
  for (auto& [sigma, blk] : s.blocks)
    for (auto& z : blk) z /= nrm;
  return s;
}

} // namespace qlb
