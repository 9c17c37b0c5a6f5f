#pragma once

#include "qlb/algorithm.hpp"
#include "qlb/ystate.hpp"

namespace qlb {

// ---- Operators on full states (input register x algorithm register) ----

// Aggregated knowledge-selected transfer map: weight 1/sqrt(|M|) per
// member, keeping only the sigmas whose support the selector admits.
// Members are accumulated in canonical id order.
YState apply_transfer(const SparseFourierState& s, const PartitionOrbit& M,
                      Selector sel = Selector::transfer());

// Single-member variant, without the aggregation weight.
YState apply_transfer_mu(const SparseFourierState& s, const PartitionOrbit& M,
                         std::size_t m, Selector sel = Selector::transfer());

// Aggregated boundary map: the (sigma, a) amplitude with a decoding to
// query cell i is routed through the i-boundary of every member.
YState apply_boundary(const SparseFourierState& s, const PartitionOrbit& M,
                      const ProblemDims& dims);

// Query profile projector: keeps (member, tau, a) entries whose decoded
// cell i lies in the member's highlighted block.
YState apply_xi(const YState& y, const PartitionOrbit& M,
                const ProblemDims& dims);

// Oracle conjugated to the Y side: for each a decoding to (i, c), the tau
// value of the block containing i gains c.
YState apply_oracle_y(const YState& y, const PartitionOrbit& M,
                      const ProblemDims& dims);

// ---- Operators on input-register vectors ----

YXVector yx_transfer(const XVector& v, const PartitionOrbit& M,
                     Selector sel = Selector::transfer());
YXVector yx_transfer_mu(const XVector& v, const PartitionOrbit& M,
                        std::size_t m, Selector sel = Selector::transfer());

// Standalone single-partition image (member id 0, no aggregation weight),
// independent of any orbit; hiIdx = -1 when no block is highlighted.
YXVector yx_transfer_part(const XVector& v, const Partition& p, int hiIdx,
                          const KnowledgeSystem& ks, Selector sel);

// O_{i,c} on the Y side.
YXVector yx_oracle(const YXVector& y, const PartitionOrbit& M, int i, int c,
                   int q);

// Sum of amplitudes over the selected sigma class mapping to tau. Works for
// standalone partitions (hiIdx = -1 when none), independent of any orbit.
cplx beta_sum(const XVector& phi, const Partition& p, int hiIdx,
              const KnowledgeSystem& ks, Selector sel, const std::string& tau);

// ---- Responses and success ----

// Measurement responses indexed by the k-subsets of [n] in mask order.
struct ResponseSet {
  int n = 0;
  int k = 0;
  std::vector<std::uint64_t> masks;

  static ResponseSet k_subsets(int n, int k);

  std::size_t index_of(std::uint64_t mask) const;

  // A member supports response rho when rho is its highlighted block
  // (highlighted orbits) or one of its blocks (unhighlighted orbits).
  bool member_matches(const PartitionOrbit& M, std::size_t m,
                      std::size_t r) const;
};

// Keeps the entries of members supporting response r.
YState project_response(const YState& y, const PartitionOrbit& M,
                        const ResponseSet& rs, std::size_t r);

// Total squared amplitude of (member, tau, a) entries whose member supports
// the response labelling a.
double success_probability(const YState& y, const PartitionOrbit& M,
                           const Measurement& meas, const ResponseSet& rs);

} // namespace qlb
