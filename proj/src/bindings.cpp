#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qlb/experiments.hpp"

namespace py = pybind11;
using namespace qlb;

namespace {

Selector selector_from(const std::string& flavor) {
  if (flavor == "transfer") return Selector::transfer();
  if (flavor == "plus") return Selector::plus();
  if (flavor == "minus") return Selector::minus();
  throw ParseError("flavor must be transfer, plus or minus");
}

HighlightedPartition highlighted_seed(const std::string& text) {
  const auto parsed = parse_partition(text);
  if (!parsed.highlighted)
    throw ParseError("seed needs a highlighted block, e.g. \"*1,2/3\"");
  return {parsed.partition, *parsed.highlighted};
}

} // namespace

PYBIND11_MODULE(_qlb, m) {
  m.doc() = "Transfer-operator numerics for query algorithms";

  py::register_exception<ParseError>(m, "QlbParseError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "QlbCapExceeded", PyExc_RuntimeError);

  m.def(
      "canonical_partition",
      [](const std::string& text) {
        const auto parsed = parse_partition(text);
        return format_partition(parsed.partition, parsed.highlighted);
      },
      py::arg("text"),
      "Canonical text form of a partition, blocks sorted by minimum "
      "element; a leading '*' marks the highlighted block.");

  m.def(
      "orbit_size",
      [](const std::string& seed, int k) {
        const auto parsed = parse_partition(seed);
        if (parsed.highlighted)
          return orbit_of(HighlightedPartition{parsed.partition,
                                               *parsed.highlighted})
              .size();
        return orbit_of(parsed.partition,
                        KnowledgeSystem::intersection_at_least(k))
            .size();
      },
      py::arg("seed"), py::arg("k") = 2,
      "Number of partitions sharing the seed's block-size multiset; a "
      "highlighted seed counts (partition, highlighted block) pairs.");

  m.def(
      "hierarchy_levels",
      [](const std::string& seed) {
        const auto h = build_hierarchy(highlighted_seed(seed));
        py::list out;
        for (int l = 1; l <= h.k; ++l) {
          const auto& s = h.seeds[static_cast<std::size_t>(l - 1)];
          py::dict row;
          row["level"] = l;
          row["seed"] = format_partition(s.partition, s.highlighted);
          row["m_size"] = h.M[static_cast<std::size_t>(l - 1)].size();
          row["mo_size"] = h.Mo[static_cast<std::size_t>(l - 1)].size();
          out.append(row);
        }
        return out;
      },
      py::arg("seed"),
      "Orbit sizes along the splitting chain below a highlighted seed.");

  m.def(
      "gamma",
      [](int n, int k, int t, int q, const std::string& flavor,
         std::uint64_t rng_seed) {
        const auto seed = derive_top_seed(n, k);
        const auto M = orbit_of(seed.partition,
                                KnowledgeSystem::intersection_at_least(k));
        const auto rs = ResponseSet::k_subsets(n, k);
        GammaOptions opt;
        opt.powerSeed = rng_seed;
        const auto rep =
            compute_gamma(M, selector_from(flavor), t, n, q, rs, opt);
        py::dict out;
        out["gamma"] = rep.gamma;
        out["rank"] = rep.rank;
        out["basis_columns"] = rep.basisColumns;
        out["rank_collapse"] = rep.rankCollapse;
        out["argmax_rho"] = rep.argmaxRho;
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("t"), py::arg("q"),
      py::arg("flavor") = "minus", py::arg("rng_seed") = 1,
      "Anti-concentration constant of the selected transfer image of the "
      "support-bounded subspace, on the one-k-block orbit family.");

  m.def(
      "trajectory",
      [](const std::string& seed, int q, int dim_w, int T,
         const std::string& algorithm, std::uint64_t rng_seed) {
        const auto h = build_hierarchy(highlighted_seed(seed));
        const ProblemDims dims{h.n, q, dim_w};
        dims.validate();
        Rng rng(rng_seed);
        QueryAlgorithm alg;
        if (algorithm == "random") {
          alg = random_algorithm(dims, T, rng);
        } else if (algorithm == "identity") {
          alg = identity_algorithm(dims, T);
        } else if (algorithm == "blind_sequential") {
          alg = blind_sequential_algorithm(dims, T);
        } else {
          throw ParseError(
              "algorithm must be random, identity or blind_sequential");
        }
        const auto rep = knowledge_trajectory(alg, h);
        py::dict out;
        out["all_pass"] = rep.allPass;
        py::list fk;
        for (int l = 1; l <= rep.k; ++l) fk.append(rep.final_knowledge(l));
        out["final_knowledge"] = fk;
        py::list rows;
        for (const auto& r : rep.rows) {
          py::dict row;
          row["t"] = r.t;
          row["level"] = r.level;
          row["knowledge"] = r.knowledge;
          row["knowledge_prime"] = r.knowledgePrime;
          row["gain_prime"] = r.gainPrime;
          row["gain_next"] = r.gainNext;
          row["profile_norm"] = r.profile;
          rows.append(row);
        }
        out["rows"] = rows;
        return out;
      },
      py::arg("seed"), py::arg("q"), py::arg("dim_w") = 1, py::arg("T") = 2,
      py::arg("algorithm") = "random", py::arg("rng_seed") = 1,
      "Per-step knowledge levels, gains and inequality checks for one "
      "uniform-input run over the hierarchy below the seed.");

  m.def(
      "run_config",
      [](const std::string& config_json) {
        ExperimentConfig cfg = parse_config(config_json);
        cfg.out.clear();
        std::ostringstream os;
        int rc = 0;
        if (cfg.experiment == "verify") {
          rc = cmd_verify(cfg, os);
        } else if (cfg.experiment == "anticoncentration") {
          rc = cmd_anticoncentration(cfg, os);
        } else if (cfg.experiment == "trajectory") {
          rc = cmd_trajectory(cfg, os);
        } else if (cfg.experiment == "orbit") {
          rc = cmd_orbit(cfg, os);
        } else {
          rc = cmd_relaxed_vs_strict(cfg, os);
        }
        return py::make_tuple(rc, os.str());
      },
      py::arg("config_json"),
      "Run one experiment from a JSON config string; returns (exit_code, "
      "artifact_text). Malformed configs raise QlbParseError.");
}
