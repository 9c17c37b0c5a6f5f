#include "doctest.h"

#include "qlb/rng.hpp"
#include "qlb/transfer.hpp"

using namespace qlb;

namespace {

// chi_sigma written out in the standard input basis: q^{-n/2} sum_x
// omega^{<sigma, x>} |x>.
Eigen::VectorXcd chi_standard(const std::string& sigma, int n, int q) {
  const auto xs = all_inputs(n, q);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t j = 0; j < xs.size(); ++j)
    v[static_cast<Eigen::Index>(j)] = omega_pow(q, pairing(sigma, xs[j]));
  return v / std::sqrt(static_cast<double>(xs.size()));
}

} // namespace

TEST_CASE("block sums of sigma reduce mod q") {
  const auto p = parse_partition("1,2/3").partition;
  std::string sigma = {1, 1, 0};
  CHECK(transfer_sigma(p, sigma, 3) == std::string({2, 0}));
  sigma = {2, 2, 1};
  CHECK(transfer_sigma(p, sigma, 3) == std::string({1, 1}));
}

TEST_CASE("ykey packing round trips") {
  const auto key = pack_ykey(305419896u, std::string({3, 0, 1}));
  const auto [m, tau] = unpack_ykey(key);
  CHECK(m == 305419896u);
  CHECK(tau == std::string({3, 0, 1}));
}

// Independent matrix model: the transfer map for a single partition mu is
// sqrt(q^{n-|mu|}) sum_z |z><z^lift| with z over block value assignments and
// z^lift the input word constant on each block. Applied to chi_sigma it must
// produce exactly chi_tau on the block register, tau the block sums of
// sigma. The sparse implementation encodes that action directly, so the two
// must agree on all q^n basis vectors.
TEST_CASE("transfer map agrees with its standard-basis matrix on all sigmas") {
  const int n = 3, q = 3;
  const auto p = parse_partition("1,2/3").partition;

  const auto zs = all_inputs(static_cast<int>(p.numBlocks()), q);
  const auto xs = all_inputs(n, q);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(zs.size()), static_cast<Eigen::Index>(xs.size()));
  for (std::size_t zi = 0; zi < zs.size(); ++zi) {
    std::vector<int> lift(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
      lift[static_cast<std::size_t>(i - 1)] = zs[zi][p.blockOf(i)];
    for (std::size_t xi = 0; xi < xs.size(); ++xi)
      if (xs[xi] == lift)
        M(static_cast<Eigen::Index>(zi), static_cast<Eigen::Index>(xi)) = 1.0;
  }
  M *= std::sqrt(std::pow(static_cast<double>(q),
                          n - static_cast<int>(p.numBlocks())));

  for (const auto& x : xs) {
    std::string sigma(static_cast<std::size_t>(n), '\0');
    for (int i = 0; i < n; ++i)
      sigma[static_cast<std::size_t>(i)] = static_cast<char>(x[static_cast<std::size_t>(i)]);
    const Eigen::VectorXcd img = M * chi_standard(sigma, n, q);
    const std::string tau = transfer_sigma(p, sigma, q);
    // Expected: chi_tau over the block register.
    const auto zsAll = all_inputs(static_cast<int>(p.numBlocks()), q);
    for (std::size_t zi = 0; zi < zsAll.size(); ++zi) {
      const cplx want =
          omega_pow(q, pairing(tau, zsAll[zi])) /
          std::sqrt(std::pow(static_cast<double>(q), static_cast<int>(p.numBlocks())));
      CHECK(std::abs(img[static_cast<Eigen::Index>(zi)] - want) < 1e-12);
    }
  }
}

TEST_CASE("single-member images expose beta sums") {
  Rng rng(31);
  const auto phi = random_xvector(4, 3, 3, 7, rng);
  const auto seed = parse_partition("1,2/3/4").partition;
  const auto M = orbit_of(seed, KnowledgeSystem::intersection_at_least(2));
  for (std::size_t m = 0; m < M.size(); ++m) {
    for (auto sel : {Selector::transfer(), Selector::plus(), Selector::minus()}) {
      const auto img = yx_transfer_mu(phi, M, m, sel);
      for (const auto& [key, z] : img.amps) {
        const auto [mm, tau] = unpack_ykey(key);
        CHECK(mm == m);
        const cplx b = beta_sum(phi, M.part(m), M.hi(m), M.knowledge, sel, tau);
        CHECK(std::abs(z - b) < 1e-12);
      }
    }
  }
}

TEST_CASE("plus and minus tiles add up to the full transfer map") {
  Rng rng(37);
  const ProblemDims d{4, 3, 2};
  const auto s = random_state(d, 2, 6, rng);
  const auto seed = parse_partition("*1,2/3/4");
  const auto M = orbit_of(HighlightedPartition{seed.partition, *seed.highlighted});
  auto plus = apply_transfer(s, M, Selector::plus());
  const auto minus = apply_transfer(s, M, Selector::minus());
  const auto full = apply_transfer(s, M, Selector::transfer());
  add_scaled(plus, minus, 1.0);
  CHECK(max_entry_diff(plus, full) < 1e-12);
}

TEST_CASE("transfer images of trajectory states are normalized") {
  const ProblemDims d{4, 3, 1};
  Rng rng(41);
  const auto alg = random_algorithm(d, 2, rng);
  const auto tr = run_uniform(alg);
  const auto seed = parse_partition("1,2/3/4").partition;
  const auto M = orbit_of(seed, KnowledgeSystem::intersection_at_least(2));
  for (const auto& psi : tr.psi) {
    for (std::size_t m = 0; m < M.size(); ++m)
      CHECK(apply_transfer_mu(psi, M, m).norm() ==
            doctest::Approx(1.0).epsilon(1e-9));
    CHECK(apply_transfer(psi, M).norm() == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("no knowledge is present before the first query") {
  const ProblemDims d{4, 3, 2};
  const auto psi0 = uniform_initial_state(d);
  const auto iak = orbit_of(parse_partition("1,2/3/4").partition,
                            KnowledgeSystem::intersection_at_least(2));
  CHECK(apply_transfer(psi0, iak, Selector::plus()).norm() == 0.0);
  const auto seed = parse_partition("*1,2/3/4");
  const auto hs = orbit_of(HighlightedPartition{seed.partition, *seed.highlighted});
  CHECK(apply_transfer(psi0, hs, Selector::plus()).norm() == 0.0);
}

TEST_CASE("algorithm unitaries leave knowledge norms unchanged") {
  const ProblemDims d{4, 2, 2};
  Rng rng(43);
  const auto s = random_state(d, 2, 5, rng);
  const auto U = random_unitary(d.dimA(), rng);
  const auto sU = apply_unitary(s, U);
  const auto seed = parse_partition("*1,2/3/4");
  const auto M = orbit_of(HighlightedPartition{seed.partition, *seed.highlighted});
  for (auto sel : {Selector::transfer(), Selector::plus(), Selector::minus()})
    CHECK(apply_transfer(s, M, sel).norm() ==
          doctest::Approx(apply_transfer(sU, M, sel).norm()).epsilon(1e-10));
}

TEST_CASE("oracle commutes with the full transfer map") {
  const ProblemDims d{4, 3, 2};
  Rng rng(47);
  const auto s = random_state(d, 2, 6, rng);
  const auto seed = parse_partition("1,2/3/4").partition;
  const auto M = orbit_of(seed, KnowledgeSystem::intersection_at_least(2));
  const auto lhs = apply_transfer(apply_oracle(s), M);
  const auto rhs = apply_oracle_y(apply_transfer(s, M), M, d);
  CHECK(max_entry_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("query profile keeps exactly the highlighted-cell amplitudes") {
  const ProblemDims d{4, 2, 1};
  Rng rng(53);
  const auto s = random_state(d, 2, 6, rng);
  const auto seed = parse_partition("*1,2/3/4");
  const auto M = orbit_of(HighlightedPartition{seed.partition, *seed.highlighted});
  const auto y = apply_transfer(s, M);
  const auto xi = apply_xi(y, M, d);
  double kept = 0;
  for (const auto& [key, blk] : y.entries) {
    const auto m = unpack_ykey(key).first;
    const auto hiMask = M.part(m).blocks[static_cast<std::size_t>(M.hi(m))];
    for (std::size_t a = 0; a < blk.size(); ++a)
      if (hiMask & (std::uint64_t{1} << (d.decode(static_cast<int>(a)).i - 1)))
        kept += std::norm(blk[a]);
  }
  CHECK(xi.norm2() == doctest::Approx(kept).epsilon(1e-12));
  CHECK(max_entry_diff(apply_xi(xi, M, d), xi) < 1e-14);
}

TEST_CASE("boundary image lives inside the query profile") {
  const ProblemDims d{4, 2, 1};
  Rng rng(59);
  const auto s = random_state(d, 2, 6, rng);
  const auto seed = parse_partition("*1,2/3/4");
  const auto M = orbit_of(HighlightedPartition{seed.partition, *seed.highlighted});
  const auto bd = apply_boundary(s, M, d);
  CHECK(max_entry_diff(apply_xi(bd, M, d), bd) < 1e-14);
}

TEST_CASE("constant-answer strategy scores one sixth on four cells") {
  // The algorithm makes no queries and always answers the pair {1, 2};
  // exactly one of the six pair members supports it.
  const int n = 4, q = 5;
  const auto rs = ResponseSet::k_subsets(n, 2);
  const ProblemDims d{n, q, static_cast<int>(rs.masks.size())};
  const auto wStar = static_cast<int>(rs.index_of(0b0011));

  QueryAlgorithm alg{d, {Eigen::MatrixXcd::Identity(d.dimA(), d.dimA())}};
  const int from = d.algIndex(1, 0, 0), to = d.algIndex(1, 0, wStar);
  alg.unitaries[0](from, from) = 0.0;
  alg.unitaries[0](to, to) = 0.0;
  alg.unitaries[0](from, to) = 1.0;
  alg.unitaries[0](to, from) = 1.0;

  Measurement meas{static_cast<int>(rs.masks.size()),
                   std::vector<int>(static_cast<std::size_t>(d.dimA()))};
  for (int a = 0; a < d.dimA(); ++a)
    meas.label[static_cast<std::size_t>(a)] = d.decode(a).w;

  const auto tr = run_uniform(alg);
  const auto M = orbit_of(parse_partition("1,2/3/4").partition,
                          KnowledgeSystem::intersection_at_least(2));
  const auto y = apply_transfer(tr.psiPrime.back(), M);
  CHECK(success_probability(y, M, meas, rs) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  const auto proj = project_response(y, M, rs, static_cast<std::size_t>(wStar));
  CHECK(proj.norm2() == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}
