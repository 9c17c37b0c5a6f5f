#pragma once

#include "qlb/transfer.hpp"

namespace qlb {

struct GammaOptions {
  std::size_t subspaceCap = kDefaultSubspaceCap;
  std::uint64_t powerSeed = 1;
  // Largest matrix handed to the dense eigensolver; bigger ones go through
  // seeded power iteration.
  int denseEigCap = 2000;
};

// Spectral report for one subspace: gammaRho[r] is the operator norm of the
// response-r projector restricted to the orthonormalized column space of
// the selected transfer map.
struct GammaReport {
  std::string orbit;  // seed descriptor of the collection
  std::string flavor; // transfer | minus | plus
  int n = 0;
  int q = 0;
  int t = -1; // support cutoff; -1 for explicit spans
  std::size_t basisColumns = 0;
  int rank = 0;
  double rankTolUsed = 0; // absolute singular value threshold applied
  bool rankCollapse = false;
  std::vector<double> gammaRho;
  double gamma = 0;
  std::size_t argmaxRho = 0;
};

// All phase functions with support size <= t, ordered by (support size,
// support set, values); throws CapExceeded past cap.
std::vector<std::string> enumerate_sigmas(int n, int q, int t,
                                          std::size_t cap = kDefaultSubspaceCap);

// Anti-concentration constant of the selected transfer image of X_{<=t}.
GammaReport compute_gamma(const PartitionOrbit& M, Selector flavor, int t,
                          int n, int q, const ResponseSet& rs,
                          const GammaOptions& opt = {});

// Same computation on the span of explicit vectors instead of a full
// bounded-support basis.
GammaReport compute_gamma_span(const PartitionOrbit& M, Selector flavor,
                               const std::vector<XVector>& span, int n, int q,
                               const ResponseSet& rs,
                               const GammaOptions& opt = {});

} // namespace qlb
