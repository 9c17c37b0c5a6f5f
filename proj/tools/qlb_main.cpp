#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qlb/experiments.hpp"

namespace {

int run_one(const std::string& experiment, const std::string& configPath,
            const std::string& outOverride, bool seedGiven,
            std::uint64_t seed) {
  std::ifstream f(configPath);
  if (!f) {
    std::cerr << "error: cannot read config " << configPath << "\n";
    return 2;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    qlb::ExperimentConfig cfg = qlb::parse_config(ss.str(), experiment);
    if (!outOverride.empty()) cfg.out = outOverride;
    if (seedGiven) cfg.rngSeed = seed;
    if (const char* env = std::getenv("QLB_MAX_ORBIT")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (!end || *end != '\0' || env == end) {
        std::cerr << "error: QLB_MAX_ORBIT is not an unsigned integer\n";
        return 2;
      }
      if (v == 0) {
        std::cerr << "error: QLB_MAX_ORBIT must be positive\n";
        return 2;
      }
      cfg.orbitCap = v;
    }
    return qlb::run_experiment(cfg);
  } catch (const qlb::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Numerical checks for query lower bounds: transfer-operator "
      "verification suites, anti-concentration sweeps, and knowledge "
      "trajectories over partition orbits."};
  app.require_subcommand(1);

  std::string configPath, outOverride;
  std::uint64_t seed = 0;
  bool seedGiven = false;

  const std::pair<const char*, const char*> kinds[] = {
      {"verify", "Run the identity and inequality suite; JSON report."},
      {"anticoncentration", "Sweep gamma over problem sizes; CSV."},
      {"trajectory", "Per-step knowledge and gain numbers; CSV."},
      {"orbit", "Hierarchy orbit sizes and ratios; CSV."},
      {"relaxed-vs-strict",
       "Exhaustive relaxed versus strict success comparison; JSON."}};
  for (const auto& [name, desc] : kinds) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("--config", configPath, "Experiment config (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out", outOverride, "Artifact path (default: stdout)");
    sub->add_option("--seed", seed, "RNG seed override")
        ->each([&seedGiven](const std::string&) { seedGiven = true; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  return run_one(app.get_subcommands().front()->get_name(), configPath,
                 outOverride, seedGiven, seed);
}
