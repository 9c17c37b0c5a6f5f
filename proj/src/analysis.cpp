#include "qlb/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include <boost/rational.hpp>

#include "qlb/transfer.hpp"

namespace qlb {

namespace {

std::string fmtd(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

CheckResult check_le(std::string name, std::string params, double value,
                     double bound, double slack) {
  const bool pass = value <= bound + slack;
  return {std::move(name), std::move(params), value, bound, pass};
}

} // namespace

double transfer_norm(const SparseFourierState& s, const PartitionOrbit& M,
                     Selector sel) {
  const double w2 = 1.0 / static_cast<double>(M.size());
  double total = 0;
  std::unordered_map<std::string, std::vector<cplx>> local;
  for (std::size_t m = 0; m < M.size(); ++m) {
    const Partition& p = M.part(m);
    const int hi = M.hi(m);
    local.clear();
    for (const auto& [sigma, blk] : s.blocks) {
      if (!selector_keeps(sel, M.knowledge, p, hi, support_mask(sigma)))
        continue;
      auto& dst = local[transfer_sigma(p, sigma, s.dims.q)];
      if (dst.empty()) dst.assign(blk.size(), cplx{0.0});
      for (std::size_t a = 0; a < blk.size(); ++a) dst[a] += blk[a];
    }
    for (const auto& [tau, blk] : local)
      for (const cplx& z : blk) total += w2 * std::norm(z);
  }
  return std::sqrt(total);
}

double commutator_residual(const PartitionOrbit& M, std::size_t m, int i,
                           int c, const XVector& phi) {
  const XVector oPhi = apply_oracle_x(phi, i, c);

  YXVector lhs = yx_transfer_mu(oPhi, M, m, Selector::plus());
  add_scaled(lhs, yx_oracle(yx_transfer_mu(phi, M, m, Selector::plus()), M, i,
                            c, phi.q),
             -1.0);

  YXVector rhs = yx_oracle(
      yx_transfer_mu(phi, M, m, Selector::boundary(i)), M, i, c, phi.q);
  add_scaled(rhs, yx_transfer_mu(oPhi, M, m, Selector::boundary(i)), -1.0);

  return max_entry_diff(lhs, rhs);
}

ResidualReport verify_commutator(const PartitionOrbit& M, int numSamples,
                                 int maxSupport, int numSigmas, int n, int q,
                                 Rng& rng) {
  ResidualReport rep;
  rep.name = "query_gain.commutator";
  rep.params = "n=" + std::to_string(n) + " q=" + std::to_string(q) +
               " orbit=" + format_partition(M.part(0));
  rep.tolerance = kExactTol;
  std::uniform_int_distribution<std::size_t> pickM(0, M.size() - 1);
  std::uniform_int_distribution<int> pickI(1, n);
  std::uniform_int_distribution<int> pickC(1, q - 1);
  for (int s = 0; s < numSamples; ++s) {
    const XVector phi = random_xvector(n, q, maxSupport, numSigmas, rng);
    const double r =
        commutator_residual(M, pickM(rng), pickI(rng), pickC(rng), phi);
    rep.maxResidual = std::max(rep.maxResidual, r);
    ++rep.samples;
  }
  rep.pass = rep.maxResidual <= rep.tolerance;
  return rep;
}

const TrajectoryStepRow& TrajectoryReport::row(int t, int level) const {
  return rows.at(static_cast<std::size_t>(t * k + (level - 1)));
}

double TrajectoryReport::final_knowledge(int level) const {
  return row(T, level).knowledgePrime;
}

TrajectoryReport knowledge_trajectory(const QueryAlgorithm& alg,
                                      const Hierarchy& h) {
  if (alg.dims.n != h.n) throw ParseError("hierarchy dims mismatch");
  const ProblemDims dims = alg.dims;
  const int T = alg.T();
  const Trajectory tr = run_uniform(alg);

  TrajectoryReport rep;
  rep.T = T;
  rep.k = h.k;

  for (int t = 0; t <= T; ++t) {
    const auto& psi = tr.psi[static_cast<std::size_t>(t)];
    const auto& psiP = tr.psiPrime[static_cast<std::size_t>(t)];
    double circDev = 0;
    for (int j = 1; j <= h.k; ++j)
      circDev = std::max(
          circDev,
          std::abs(transfer_norm(psi, h.Mo[static_cast<std::size_t>(j - 1)]) -
                   1.0));

    for (int level = 1; level <= h.k; ++level) {
      const PartitionOrbit& M = h.M[static_cast<std::size_t>(level - 1)];
      TrajectoryStepRow row;
      row.t = t;
      row.level = level;
      row.circDev = circDev;
      row.knowledge = transfer_norm(psi, M, Selector::plus());
      const YState plusPrime = apply_transfer(psiP, M, Selector::plus());
      row.knowledgePrime = plusPrime.norm();
      row.profile = apply_xi(plusPrime, M, dims).norm();
      const YState bdPrime = apply_boundary(psiP, M, dims);
      row.gainPrime = bdPrime.norm();

      if (t < T) {
        row.hasNext = true;
        const auto& psiNext = tr.psi[static_cast<std::size_t>(t + 1)];
        const YState bdNext = apply_boundary(psiNext, M, dims);
        row.gainNext = bdNext.norm();

        YState lhs = apply_transfer(psiNext, M, Selector::plus());
        const double knowNext = lhs.norm();
        add_scaled(lhs, apply_oracle_y(plusPrime, M, dims), -1.0);
        YState rhs = apply_oracle_y(bdPrime, M, dims);
        add_scaled(rhs, bdNext, -1.0);
        row.resIdentity = max_entry_diff(lhs, rhs);

        const double G = row.gainPrime + row.gainNext;
        row.resSimple = (knowNext - row.knowledge) - G;
        row.resRefined = (knowNext * knowNext - row.knowledge * row.knowledge) -
                         (2.0 * row.profile * G + G * G);
      }
      rep.rows.push_back(row);
    }
  }

  for (int level = 1; level <= h.k; ++level) {
    const std::string params = "level=" + std::to_string(level);
    rep.checks.push_back(check_le("trajectory.knowledge_start_zero", params,
                                  rep.row(0, level).knowledge, 0.0, 1e-12));
    double primeDev = 0, maxIdent = 0, maxSimple = -1e300, maxRefined = -1e300;
    double gainSum = 0, maxCirc = 0;
    for (int t = 0; t <= T; ++t) {
      const auto& row = rep.row(t, level);
      primeDev = std::max(primeDev,
                          std::abs(row.knowledge - row.knowledgePrime));
      maxCirc = std::max(maxCirc, row.circDev);
      if (row.hasNext) {
        maxIdent = std::max(maxIdent, row.resIdentity);
        maxSimple = std::max(maxSimple, row.resSimple);
        maxRefined = std::max(maxRefined, row.resRefined);
        gainSum += row.gainPrime + row.gainNext;
      }
    }
    rep.checks.push_back(
        check_le("trajectory.prime_equal", params, primeDev, 0.0, kTrajTol));
    rep.checks.push_back(
        check_le("trajectory.circ_norm", params, maxCirc, 0.0, kTrajTol));
    if (T > 0) {
      rep.checks.push_back(
          check_le("trajectory.identity", params, maxIdent, 0.0, kExactTol));
      rep.checks.push_back(
          check_le("trajectory.gain_simple", params, maxSimple, 0.0, kTrajTol));
      rep.checks.push_back(check_le("trajectory.gain_refined", params,
                                    maxRefined, 0.0, kTrajTol));
    }
    rep.checks.push_back(check_le("trajectory.upper_bound", params,
                                  rep.final_knowledge(level), gainSum,
                                  kTrajTol));
  }

  rep.allPass = std::all_of(rep.checks.begin(), rep.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
  return rep;
}

CheckResult verify_splitting_bound(const HighlightedPartition& mu2, int i,
                                   const XVector& phi) {
  const auto hs = KnowledgeSystem::highlighted_superset();
  const double lhs =
      yx_transfer_part(phi, mu2.partition, static_cast<int>(mu2.highlighted),
                       hs, Selector::boundary(i))
          .norm();
  const HighlightedPartition mu1 = split_off(mu2, i);
  const double rhs =
      yx_transfer_part(phi, mu1.partition, static_cast<int>(mu1.highlighted),
                       hs, Selector::plus())
          .norm();
  return check_le("query_gain.splitting",
                  "mu2=" + format_partition(mu2.partition, mu2.highlighted) +
                      " i=" + std::to_string(i),
                  lhs, rhs, kExactTol);
}

CheckResult verify_query_lemma(const PartitionOrbit& M2,
                               const PartitionOrbit& M1,
                               const SparseFourierState& psi) {
  const double ratio = std::sqrt(static_cast<double>(M1.size()) /
                                 static_cast<double>(M2.size()));
  const double lhs = apply_boundary(psi, M2, psi.dims).norm();
  const double rhs = ratio * transfer_norm(psi, M1, Selector::plus());
  return check_le("query_gain.query_lemma",
                  "ratio=" + fmtd(ratio) + " 1/sqrt(n)=" +
                      fmtd(1.0 / std::sqrt(static_cast<double>(psi.dims.n))),
                  lhs, rhs, kExactTol);
}

CheckResult verify_upsilon1_bound(const PartitionOrbit& Mo,
                                  const PartitionOrbit& Mdot,
                                  const XVector& phi, int t) {
  if (phi.max_support() > t)
    throw ParseError("phi exceeds the stated support cutoff");
  int singles = 0;
  for (std::uint64_t b : Mo.part(0).blocks) singles += (popcount_mask(b) == 1);
  if (singles == 0) throw ParseError("seed has no singletons");
  const double lhs2 = yx_transfer(phi, Mdot, Selector::plus()).norm2();
  const double rhs2 = static_cast<double>(t) / static_cast<double>(singles) *
                      yx_transfer(phi, Mo, Selector::transfer()).norm2();
  return check_le("query_gain.upsilon1",
                  "t=" + std::to_string(t) +
                      " singletons=" + std::to_string(singles),
                  lhs2, rhs2, kExactTol);
}

CheckResult verify_xi_norm(const Hierarchy& h, int level,
                           const SparseFourierState& psiPrime) {
  if (level < 2 || level >= h.k)
    throw ParseError("profile bound holds for levels 2..k-1 only");
  const PartitionOrbit& M = h.M[static_cast<std::size_t>(level - 1)];
  const YState plus = apply_transfer(psiPrime, M, Selector::plus());
  const double value = apply_xi(plus, M, psiPrime.dims).norm();

  // Explicit form of the reconstruction count: at most 2^level alteration
  // terms per pair, at most 3 n^{level-j} preimages per target pair.
  const double n = h.n;
  double bound2 = 0;
  for (int j = 1; j <= level; ++j) {
    const double circ =
        transfer_norm(psiPrime, h.Mo[static_cast<std::size_t>(j - 1)]);
    bound2 += 3.0 * std::pow(n, level - j) *
              static_cast<double>(h.Mo[static_cast<std::size_t>(j - 1)].size()) *
              circ * circ;
  }
  bound2 *= std::pow(2.0, level) / static_cast<double>(M.size());
  return check_le("profile.norm_bound", "level=" + std::to_string(level),
                  value, std::sqrt(bound2), kTrajTol);
}

ResidualReport verify_ed_alterations(const PartitionOrbit& Med,
                                     const XVector& phi, int numSamples,
                                     Rng& rng) {
  ResidualReport rep;
  rep.name = "anticoncentration.ed_alterations";
  rep.tolerance = kExactTol;
  const int n = phi.n, q = phi.q;
  rep.params = "n=" + std::to_string(n) + " q=" + std::to_string(q);
  const auto ks = KnowledgeSystem::intersection_at_least(2);
  std::uniform_int_distribution<std::size_t> pickM(0, Med.size() - 1);
  std::uniform_int_distribution<int> pickV(1, q - 1);
  std::uniform_int_distribution<int> pickVal(0, q - 1);

  bool qmamOk = true;
  for (int s = 0; s < numSamples; ++s) {
    const Partition& p = Med.part(pickM(rng));
    std::size_t pairIdx = p.numBlocks();
    for (std::size_t b = 0; b < p.numBlocks(); ++b) {
      const int bs = popcount_mask(p.blocks[b]);
      if (bs == 2) {
        if (pairIdx != p.numBlocks())
          throw ParseError("alterations need pair-plus-singletons members");
        pairIdx = b;
      } else if (bs != 1) {
        throw ParseError("alterations need pair-plus-singletons members");
      }
    }
    if (pairIdx == p.numBlocks())
      throw ParseError("alterations need pair-plus-singletons members");

    // Block values: random, then force at least two zero singletons and set
    // the pair value by sample parity so both branches get exercised.
    std::map<std::uint64_t, int> val;
    std::vector<std::uint64_t> singles;
    for (std::size_t b = 0; b < p.numBlocks(); ++b) {
      val[p.blocks[b]] = pickVal(rng);
      if (b != pairIdx) singles.push_back(p.blocks[b]);
    }
    std::shuffle(singles.begin(), singles.end(), rng);
    if (singles.size() < 2) throw ParseError("need at least two singletons");
    val[singles[0]] = 0;
    val[singles[1]] = 0;
    const int v = (s % 2 == 0) ? 0 : pickV(rng);
    val[p.blocks[pairIdx]] = v;

    auto tau_of = [&](const Partition& part,
                      const std::map<std::uint64_t, int>& values) {
      std::string tau(part.numBlocks(), '\0');
      for (std::size_t b = 0; b < part.numBlocks(); ++b)
        tau[b] = static_cast<char>(values.at(part.blocks[b]));
      return tau;
    };

    // Altered partition: the pair splits into singletons a, b while the two
    // zero singletons c, d merge.
    const auto pairElems = mask_elements(p.blocks[pairIdx]);
    const std::uint64_t aMask = std::uint64_t{1} << (pairElems[0] - 1);
    const std::uint64_t bMask = std::uint64_t{1} << (pairElems[1] - 1);
    const std::uint64_t cdMask = singles[0] | singles[1];
    std::vector<std::uint64_t> blocks{aMask, bMask, cdMask};
    for (std::size_t b = 2; b < singles.size(); ++b) blocks.push_back(singles[b]);
    const Partition altered = Partition::from_blocks(n, blocks);

    std::map<std::uint64_t, int> valA(val), valB(val);
    valA.erase(p.blocks[pairIdx]);
    valB.erase(p.blocks[pairIdx]);
    valA.erase(singles[0]);
    valA.erase(singles[1]);
    valB.erase(singles[0]);
    valB.erase(singles[1]);
    valA[cdMask] = valB[cdMask] = 0;
    valA[aMask] = v;
    valA[bMask] = 0;
    valB[aMask] = 0;
    valB[bMask] = v;

    const cplx beta =
        beta_sum(phi, p, -1, ks, Selector::minus(), tau_of(p, val));
    const cplx betaA = beta_sum(phi, altered, -1, ks, Selector::minus(),
                                tau_of(altered, valA));
    const cplx betaB = beta_sum(phi, altered, -1, ks, Selector::minus(),
                                tau_of(altered, valB));

    const double resid =
        v == 0 ? std::abs(beta - betaA) : std::abs(beta - betaA - betaB);
    rep.maxResidual = std::max(rep.maxResidual, resid);
    if (v != 0 &&
        std::norm(beta) >
            2.0 * (std::norm(betaA) + std::norm(betaB)) + kExactTol)
      qmamOk = false;
    ++rep.samples;
  }
  rep.pass = qmamOk && rep.maxResidual <= rep.tolerance;
  return rep;
}

CheckResult verify_ie_coefficients(int kMax) {
  using rat = boost::rational<long long>;
  bool allZero = true;
  for (int k = 2; k <= kMax; ++k) {
    for (int l1 = 0; l1 <= k; ++l1) {
      for (int l2 = 0; l1 + l2 < k; ++l2) {
        rat sum(0);
        for (int i = 0; i <= k; ++i) {
          const auto num = static_cast<long long>(binom_u64(k - l1, i)) *
                           static_cast<long long>(binom_u64(k - l2, k - i));
          rat term(num, static_cast<long long>(binom_u64(k, i)));
          sum += (i % 2 == 0) ? term : -term;
        }
        if (sum != rat(0)) allZero = false;
      }
    }
  }
  return {"anticoncentration.coefficients", "kMax=" + std::to_string(kMax),
          allZero ? 0.0 : 1.0, 0.0, allZero};
}

ResidualReport verify_inclusion_exclusion(const PartitionOrbit& M, int k,
                                          const XVector& phi, int numSamples,
                                          Rng& rng) {
  ResidualReport rep;
  rep.name = "anticoncentration.alteration_sum";
  rep.tolerance = kTrajTol;
  const int n = phi.n, q = phi.q;
  rep.params = "n=" + std::to_string(n) + " q=" + std::to_string(q) +
               " k=" + std::to_string(k);
  const auto ks = KnowledgeSystem::intersection_at_least(k);
  std::uniform_int_distribution<std::size_t> pickM(0, M.size() - 1);
  std::uniform_int_distribution<int> pickVal(0, q - 1);

  for (int s = 0; s < numSamples; ++s) {
    const Partition& p = M.part(pickM(rng));
    std::uint64_t rho = 0;
    std::vector<std::uint64_t> singles;
    for (std::uint64_t b : p.blocks) {
      if (popcount_mask(b) == k && !rho)
        rho = b;
      else if (popcount_mask(b) == 1)
        singles.push_back(b);
      else
        throw ParseError("orbit member lacks the k-block-plus-singletons shape");
    }
    if (!rho || static_cast<int>(singles.size()) < k)
      throw ParseError("orbit member lacks the k-block-plus-singletons shape");

    std::map<std::uint64_t, int> val;
    const int v = (s % 2 == 0) ? 0 : pickVal(rng);
    val[rho] = v;
    for (std::uint64_t b : singles) val[b] = pickVal(rng);
    std::shuffle(singles.begin(), singles.end(), rng);
    std::uint64_t D = 0;
    for (int j = 0; j < k; ++j) {
      val[singles[static_cast<std::size_t>(j)]] = 0;
      D |= singles[static_cast<std::size_t>(j)];
    }

    // All k-subsets J of rho union D; each yields the altered pair
    // (mu_J, tau_J) with J carrying the value v and the rest zeroed.
    const auto pool = mask_elements(rho | D);
    const int poolSize = static_cast<int>(pool.size());
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = j;
    cplx sum = 0;
    while (true) {
      std::uint64_t J = 0;
      for (int j : idx) J |= std::uint64_t{1} << (pool[static_cast<std::size_t>(j)] - 1);

      std::vector<std::uint64_t> blocks{J};
      std::map<std::uint64_t, int> valJ;
      valJ[J] = v;
      for (std::uint64_t b : p.blocks) {
        if (b == rho) continue;
        if (b & J) continue; // this zero singleton joined J
        blocks.push_back(b);
        valJ[b] = (b & D) ? 0 : val.at(b);
      }
      for (int e : mask_elements(rho & ~J)) {
        const std::uint64_t bm = std::uint64_t{1} << (e - 1);
        blocks.push_back(bm);
        valJ[bm] = 0;
      }
      const Partition muJ = Partition::from_blocks(n, blocks);
      std::string tauJ(muJ.numBlocks(), '\0');
      for (std::size_t b = 0; b < muJ.numBlocks(); ++b)
        tauJ[b] = static_cast<char>(valJ.at(muJ.blocks[b]));

      const int i = popcount_mask(J & D);
      const cplx beta = beta_sum(phi, muJ, -1, ks, Selector::minus(), tauJ);
      const double coeff =
          1.0 / static_cast<double>(binom_u64(k, i)) * (i % 2 == 0 ? 1 : -1);
      sum += coeff * beta;

      int j = k - 1;
      while (j >= 0 && idx[static_cast<std::size_t>(j)] == poolSize - k + j) --j;
      if (j < 0) break;
      ++idx[static_cast<std::size_t>(j)];
      for (int r = j + 1; r < k; ++r)
        idx[static_cast<std::size_t>(r)] = idx[static_cast<std::size_t>(r - 1)] + 1;
    }
    rep.maxResidual = std::max(rep.maxResidual, std::abs(sum));
    ++rep.samples;
  }
  rep.pass = rep.maxResidual <= rep.tolerance;
  return rep;
}

CheckResult framework_bound(double gamma, double delta, double measured) {
  const double bound = (gamma + delta) * (gamma + delta);
  return check_le("framework.success_bound",
                  "gamma=" + fmtd(gamma) + " delta=" + fmtd(delta), measured,
                  bound, kPipelineTol);
}

RelaxedStrictReport relaxed_vs_strict(const QueryAlgorithm& alg,
                                      const PartitionOrbit& M,
                                      const Measurement& meas,
                                      std::uint64_t cap) {
  RelaxedStrictReport rep;
  const int q = alg.dims.q;
  const auto numBlocks = M.blocksPerMember();
  double perBlockCombos = std::pow(static_cast<double>(q),
                                   static_cast<double>(numBlocks));
  if (static_cast<double>(M.size()) * perBlockCombos >
      static_cast<double>(cap))
    throw CapExceeded("relaxed-vs-strict enumeration exceeds cap");

  int blockK = 0;
  for (std::uint64_t b : M.part(0).blocks)
    blockK = std::max(blockK, popcount_mask(b));
  const ResponseSet rs = ResponseSet::k_subsets(alg.dims.n, blockK);
  if (static_cast<int>(rs.masks.size()) != meas.numResponses)
    throw ParseError("measurement response count does not match the orbit");

  double sumAll = 0, sumInj = 0;
  const auto zs = all_inputs(static_cast<int>(numBlocks), q);
  for (std::size_t m = 0; m < M.size(); ++m) {
    const Partition& p = M.part(m);
    std::vector<char> accept(rs.masks.size(), 0);
    for (std::size_t r = 0; r < rs.masks.size(); ++r)
      accept[r] = std::find(p.blocks.begin(), p.blocks.end(), rs.masks[r]) !=
                  p.blocks.end();
    for (const auto& z : zs) {
      std::vector<int> x(static_cast<std::size_t>(alg.dims.n));
      for (int i = 1; i <= alg.dims.n; ++i)
        x[static_cast<std::size_t>(i - 1)] = z[p.blockOf(i)];
      bool injective = true;
      for (std::size_t a = 0; a < z.size() && injective; ++a)
        for (std::size_t b = a + 1; b < z.size(); ++b)
          if (z[a] == z[b]) {
            injective = false;
            break;
          }
      const double ps = success_probability_on_input(alg, x, meas, accept);
      sumAll += ps;
      rep.totalCount += 1;
      if (injective) {
        sumInj += ps;
        rep.injectiveCount += 1;
      }
    }
  }
  rep.pRelaxed = sumAll / static_cast<double>(rep.totalCount);
  rep.pStrict = rep.injectiveCount
                    ? sumInj / static_cast<double>(rep.injectiveCount)
                    : 0.0;
  rep.pCollision = 1.0 - static_cast<double>(rep.injectiveCount) /
                             static_cast<double>(rep.totalCount);
  rep.pass =
      rep.pStrict <= rep.pRelaxed / (1.0 - rep.pCollision) + kExactTol;
  return rep;
}

std::vector<CheckResult> orbit_ratio_report(const Hierarchy& h) {
  std::vector<CheckResult> rows;
  for (int l = 1; l <= h.k; ++l) {
    rows.push_back({"orbit.size", "level=" + std::to_string(l),
                    static_cast<double>(h.M[static_cast<std::size_t>(l - 1)].size()),
                    0.0, true});
    rows.push_back({"orbit.circ_size", "level=" + std::to_string(l),
                    static_cast<double>(h.Mo[static_cast<std::size_t>(l - 1)].size()),
                    0.0, true});
  }
  for (int l = 1; l < h.k; ++l) {
    const double up =
        static_cast<double>(h.M[static_cast<std::size_t>(l)].size()) /
        static_cast<double>(h.M[static_cast<std::size_t>(l - 1)].size());
    rows.push_back({"orbit.ratio_up", "level=" + std::to_string(l), up, 1.0,
                    up >= 1.0 - 1e-12});
    const double hi =
        static_cast<double>(h.M[static_cast<std::size_t>(l - 1)].size()) /
        static_cast<double>(h.Mo[static_cast<std::size_t>(l - 1)].size());
    rows.push_back({"orbit.ratio_highlight", "level=" + std::to_string(l), hi,
                    1.0, hi >= 1.0 - 1e-12});
  }
  return rows;
}

Measurement workspace_measurement(const ProblemDims& dims, int numResponses) {
  if (dims.dimW != numResponses)
    throw ParseError("workspace labelling needs dimW == response count");
  Measurement meas{numResponses,
                   std::vector<int>(static_cast<std::size_t>(dims.dimA()))};
  for (int a = 0; a < dims.dimA(); ++a)
    meas.label[static_cast<std::size_t>(a)] = dims.decode(a).w;
  return meas;
}

} // namespace qlb
