#include "qlb/gamma.hpp"

#include <algorithm>
#include <map>

#include <Eigen/Dense>

namespace qlb {

std::vector<std::string> enumerate_sigmas(int n, int q, int t,
                                          std::size_t cap) {
  std::uint64_t count = 0;
  for (int j = 0; j <= t; ++j) {
    std::uint64_t term = binom_u64(n, j);
    for (int l = 0; l < j; ++l) term *= static_cast<std::uint64_t>(q - 1);
    count += term;
  }
  if (count > cap)
    throw CapExceeded("sigma basis size " + std::to_string(count) +
                      " exceeds cap " + std::to_string(cap));

  std::vector<std::string> out;
  out.reserve(count);
  for (int j = 0; j <= t; ++j) {
    // Support sets as lexicographic combinations, values as an odometer
    // over the q-1 nonzero residues.
    std::vector<int> idx(static_cast<std::size_t>(j));
    for (int l = 0; l < j; ++l) idx[static_cast<std::size_t>(l)] = l;
    bool more = j <= n;
    while (more) {
      std::vector<int> vals(static_cast<std::size_t>(j), 1);
      while (true) {
        std::string sigma(static_cast<std::size_t>(n), '\0');
        for (int l = 0; l < j; ++l)
          sigma[static_cast<std::size_t>(idx[static_cast<std::size_t>(l)])] =
              static_cast<char>(vals[static_cast<std::size_t>(l)]);
        out.push_back(std::move(sigma));
        int l = j - 1;
        while (l >= 0 && vals[static_cast<std::size_t>(l)] == q - 1)
          vals[static_cast<std::size_t>(l--)] = 1;
        if (l < 0) break;
        ++vals[static_cast<std::size_t>(l)];
      }
      if (j == 0) break;
      int l = j - 1;
      while (l >= 0 && idx[static_cast<std::size_t>(l)] == n - j + l) --l;
      if (l < 0) {
        more = false;
      } else {
        ++idx[static_cast<std::size_t>(l)];
        for (int r = l + 1; r < j; ++r)
          idx[static_cast<std::size_t>(r)] = idx[static_cast<std::size_t>(r - 1)] + 1;
      }
    }
  }
  return out;
}

namespace {

const char* flavor_name(Selector sel) {
  switch (sel.kind) {
    case Selector::Kind::Transfer: return "transfer";
    case Selector::Kind::Plus: return "plus";
    case Selector::Kind::Minus: return "minus";
    case Selector::Kind::Boundary: return "boundary";
  }
  return "?";
}

double largest_eigenvalue(const Eigen::MatrixXcd& H, std::uint64_t seed,
                          int denseCap) {
  if (H.rows() <= denseCap) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(H,
                                                        Eigen::EigenvaluesOnly);
    return eig.eigenvalues().maxCoeff();
  }
  // Power iteration; H is PSD so the Rayleigh quotient climbs to lambda_max.
  Rng rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::VectorXcd v(H.rows());
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = cplx{g(rng), g(rng)};
  v.normalize();
  double lambda = 0;
  for (int it = 0; it < kPowerIterCap; ++it) {
    Eigen::VectorXcd w = H * v;
    const double l = std::real(v.dot(w));
    const double nw = w.norm();
    if (nw == 0.0) return 0.0;
    v = w / nw;
    if (it > 0 && std::abs(l - lambda) <= kPowerIterTol * std::max(l, 1e-300))
      return l;
    lambda = l;
  }
  return lambda;
}

GammaReport engine(const PartitionOrbit& M, Selector sel,
                   const std::vector<XVector>& columns, int n, int q,
                   const ResponseSet& rs, const GammaOptions& opt) {
  GammaReport rep;
  rep.flavor = flavor_name(sel);
  rep.n = n;
  rep.q = q;
  rep.basisColumns = columns.size();
  if (!M.size()) throw ParseError("empty collection");
  rep.orbit = format_partition(M.part(0), M.highlighted
                                              ? std::optional<std::size_t>(
                                                    static_cast<std::size_t>(M.hi(0)))
                                              : std::nullopt);

  // Row space: (member, tau) pairs hit by any column, in canonical order.
  std::vector<YXVector> images;
  images.reserve(columns.size());
  std::map<std::pair<std::uint32_t, std::string>, Eigen::Index> rowOf;
  for (const auto& v : columns) {
    images.push_back(yx_transfer(v, M, sel));
    for (const auto& [key, z] : images.back().amps) rowOf[unpack_ykey(key)];
  }
  Eigen::Index nextRow = 0;
  for (auto& [key, row] : rowOf) row = nextRow++;

  const auto rows = static_cast<Eigen::Index>(rowOf.size());
  const auto cols = static_cast<Eigen::Index>(columns.size());
  rep.gammaRho.assign(rs.masks.size(), 0.0);
  if (rows == 0 || cols == 0) {
    rep.rankCollapse = true;
    return rep;
  }

  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(rows, cols);
  for (Eigen::Index cIdx = 0; cIdx < cols; ++cIdx)
    for (const auto& [key, z] : images[static_cast<std::size_t>(cIdx)].amps)
      A(rowOf.at(unpack_ykey(key)), cIdx) = z;

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double sMax = sv.size() ? sv[0] : 0.0;
  if (sMax <= 1e-12) {
    rep.rankCollapse = true;
    return rep;
  }
  rep.rankTolUsed = kRankTol * sMax;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv[rank] > rep.rankTolUsed) ++rank;
  rep.rank = static_cast<int>(rank);
  const Eigen::MatrixXcd Q = svd.matrixU().leftCols(rank);

  // Row ids per member for the response projectors.
  std::vector<std::vector<Eigen::Index>> rowsOfMember(M.size());
  for (const auto& [key, row] : rowOf)
    rowsOfMember[key.first].push_back(row);

  for (std::size_t r = 0; r < rs.masks.size(); ++r) {
    std::vector<Eigen::Index> sel_rows;
    for (std::size_t m = 0; m < M.size(); ++m)
      if (rs.member_matches(M, m, r))
        sel_rows.insert(sel_rows.end(), rowsOfMember[m].begin(),
                        rowsOfMember[m].end());
    if (sel_rows.empty()) continue;
    Eigen::MatrixXcd Qsel(static_cast<Eigen::Index>(sel_rows.size()), rank);
    for (std::size_t j = 0; j < sel_rows.size(); ++j)
      Qsel.row(static_cast<Eigen::Index>(j)) = Q.row(sel_rows[j]);
    const Eigen::MatrixXcd H = Qsel.adjoint() * Qsel;
    const double lambda = largest_eigenvalue(H, opt.powerSeed, opt.denseEigCap);
    rep.gammaRho[r] = std::sqrt(std::max(lambda, 0.0));
  }

  rep.argmaxRho = static_cast<std::size_t>(
      std::max_element(rep.gammaRho.begin(), rep.gammaRho.end()) -
      rep.gammaRho.begin());
  rep.gamma = rep.gammaRho[rep.argmaxRho];
  return rep;
}

} // namespace

GammaReport compute_gamma(const PartitionOrbit& M, Selector flavor, int t,
                          int n, int q, const ResponseSet& rs,
                          const GammaOptions& opt) {
  std::vector<XVector> columns;
  for (auto& sigma : enumerate_sigmas(n, q, t, opt.subspaceCap)) {
    XVector v{n, q, {}};
    v.amps.emplace(std::move(sigma), cplx{1.0});
    columns.push_back(std::move(v));
  }
  GammaReport rep = engine(M, flavor, columns, n, q, rs, opt);
  rep.t = t;
  return rep;
}

GammaReport compute_gamma_span(const PartitionOrbit& M, Selector flavor,
                               const std::vector<XVector>& span, int n, int q,
                               const ResponseSet& rs, const GammaOptions& opt) {
  if (span.size() > opt.subspaceCap)
    throw CapExceeded("span size exceeds cap");
  return engine(M, flavor, span, n, q, rs, opt);
}

} // namespace qlb
