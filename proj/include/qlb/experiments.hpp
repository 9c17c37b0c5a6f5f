#pragma once

#include <iosfwd>

#include "qlb/analysis.hpp"
#include "qlb/gamma.hpp"

namespace qlb {

// One experiment per process invocation; every field has a default so the
// provenance header can list the full effective configuration.
struct ExperimentConfig {
  std::string experiment = "verify"; // verify | anticoncentration |
                                     // trajectory | orbit | relaxed-vs-strict
  int n = 4;
  std::vector<int> nList;            // anticoncentration sweeps
  int q = 5;
  int dimW = 1;
  int T = 2;
  int k = 2;
  int t = -1;                        // support cutoff; -1 = family default
  std::string seedPartition;         // "" = derived k-block-plus-singletons
  std::string knowledge = "intersection_at_least"; // | highlighted_superset
  std::string gammaFlavor = "minus"; // transfer | plus | minus
  std::string algorithm = "random";  // | identity | blind_sequential
  std::string orbitFamily = "ed";    // | singleton_rich
  bool measurement = false;          // workspace labelling + framework verdict
  bool corruptUnitary = false;       // negative-control hook
  std::uint64_t rngSeed = 1;
  std::string out;                   // artifact path; "" = stdout
  std::uint64_t orbitCap = kDefaultOrbitCap;
  std::size_t subspaceCap = kDefaultSubspaceCap;
  int commutatorSamples = 200;
  int vectorSamples = 50;
};

// Strict JSON: unknown keys, wrong types, inconsistent n / seed_partition,
// non-positive caps, or k < 2 under intersection knowledge all throw
// ParseError. A nonempty expectedExperiment is injected as the experiment
// kind and must not contradict an explicit "experiment" entry.
ExperimentConfig parse_config(const std::string& jsonText,
                              const std::string& expectedExperiment = "");

// Canonical single-line JSON with every effective field, for provenance
// headers; identical configs print identically.
std::string effective_config_json(const ExperimentConfig& cfg);

// Block {1..k} highlighted plus singletons.
HighlightedPartition derive_top_seed(int n, int k);

int cmd_verify(const ExperimentConfig& cfg, std::ostream& out);
int cmd_anticoncentration(const ExperimentConfig& cfg, std::ostream& out);
int cmd_trajectory(const ExperimentConfig& cfg, std::ostream& out);
int cmd_orbit(const ExperimentConfig& cfg, std::ostream& out);
int cmd_relaxed_vs_strict(const ExperimentConfig& cfg, std::ostream& out);

// Dispatches on cfg.experiment and writes to cfg.out (or stdout). Exit
// codes: 0 pass, 1 check failure, 2 parse error, 3 cap exceeded.
int run_experiment(const ExperimentConfig& cfg);

} // namespace qlb
