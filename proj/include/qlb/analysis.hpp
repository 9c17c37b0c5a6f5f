#pragma once

#include "qlb/gamma.hpp"
#include "qlb/hierarchy.hpp"
#include "qlb/rng.hpp"

namespace qlb {

// One named check: pass semantics depend on the check (usually value <=
// bound + slack); params is a short "key=value key=value" string.
struct CheckResult {
  std::string name;
  std::string params;
  double value = 0;
  double bound = 0;
  bool pass = false;
};

// Aggregate over sampled instances of one identity.
struct ResidualReport {
  std::string name;
  std::string params;
  int samples = 0;
  double maxResidual = 0;
  double tolerance = 0;
  bool pass = false;
};

// Norm of the selected transfer image without materializing it; member
// blocks are accumulated and released one at a time.
double transfer_norm(const SparseFourierState& s, const PartitionOrbit& M,
                     Selector sel = Selector::transfer());

// Commutator of the restricted-knowledge map with one oracle letter: the
// plus-selected commutator equals the boundary-selected anticommutator
// defect. Returns the max entry residual for one (member, i, c, phi).
double commutator_residual(const PartitionOrbit& M, std::size_t m, int i,
                           int c, const XVector& phi);

ResidualReport verify_commutator(const PartitionOrbit& M, int numSamples,
                                 int maxSupport, int numSigmas, int n, int q,
                                 Rng& rng);

// Per-step, per-level numbers along one uniform-input run.
struct TrajectoryStepRow {
  int t = 0;
  int level = 0;
  double knowledge = 0;      // ||Y+_l psi_t||
  double knowledgePrime = 0; // ||Y+_l psi'_t||
  double gainPrime = 0;      // ||boundary_l psi'_t||
  double gainNext = 0;       // ||boundary_l psi_{t+1}||, 0 at t = T
  double profile = 0;        // ||Xi Y+_l psi'_t||
  double circDev = 0;        // max_j | ||Y_oj psi_t|| - 1 |
  double resIdentity = 0;    // query identity, max entry diff
  double resSimple = 0;      // first-order gain bound residual
  double resRefined = 0;     // squared gain bound residual
  bool hasNext = false;
};

struct TrajectoryReport {
  int T = 0;
  int k = 0;
  std::vector<TrajectoryStepRow> rows; // t major, level minor
  std::vector<CheckResult> checks;
  bool allPass = false;

  const TrajectoryStepRow& row(int t, int level) const;
  // Final knowledge ||Y+_level psi'_T||, the delta of the framework bound.
  double final_knowledge(int level) const;
};

TrajectoryReport knowledge_trajectory(const QueryAlgorithm& alg,
                                      const Hierarchy& h);

// Boundary map of a single highlighted partition is dominated by the
// plus map of its split at i.
CheckResult verify_splitting_bound(const HighlightedPartition& mu2, int i,
                                   const XVector& phi);

// Aggregated boundary of M2 is dominated by sqrt(|M1|/|M2|) times the
// aggregated plus map of M1.
CheckResult verify_query_lemma(const PartitionOrbit& M2,
                               const PartitionOrbit& M1,
                               const SparseFourierState& psi);

// Plus map of the singleton-highlighted collection against the unhighlighted
// transfer, with the explicit t / (number of singletons) constant.
CheckResult verify_upsilon1_bound(const PartitionOrbit& Mo,
                                  const PartitionOrbit& Mdot,
                                  const XVector& phi, int t);

// Query profile norm at one level against its explicit combinatorial bound.
CheckResult verify_xi_norm(const Hierarchy& h, int level,
                           const SparseFourierState& psiPrime);

// Pairwise local alterations on the pair-plus-singletons orbit: the minus
// beta of (mu, tau) is reproduced by the altered partitions, split by
// whether the pair value vanishes.
ResidualReport verify_ed_alterations(const PartitionOrbit& Med,
                                     const XVector& phi, int numSamples,
                                     Rng& rng);

// Exact rational coefficient identity behind the singleton alteration sum,
// all l1 + l2 < k, 2 <= k <= kMax.
CheckResult verify_ie_coefficients(int kMax);

// Numeric alternating alteration sum on a k-block-plus-singletons orbit.
ResidualReport verify_inclusion_exclusion(const PartitionOrbit& M, int k,
                                          const XVector& phi, int numSamples,
                                          Rng& rng);

CheckResult framework_bound(double gamma, double delta, double measured);

struct RelaxedStrictReport {
  double pStrict = 0;
  double pRelaxed = 0;
  double pCollision = 0;
  std::uint64_t injectiveCount = 0;
  std::uint64_t totalCount = 0;
  bool pass = false; // pStrict <= pRelaxed / (1 - pCollision)
};

// Exhaustive comparison over all members and all block value assignments;
// strict restricts to injective assignments.
RelaxedStrictReport relaxed_vs_strict(const QueryAlgorithm& alg,
                                      const PartitionOrbit& M,
                                      const Measurement& meas,
                                      std::uint64_t cap = 10'000'000);

// Size and growth ratios along a hierarchy (informational rows).
std::vector<CheckResult> orbit_ratio_report(const Hierarchy& h);

// Labels algorithm basis vectors by workspace index; dimW must equal the
// response count.
Measurement workspace_measurement(const ProblemDims& dims, int numResponses);

} // namespace qlb
