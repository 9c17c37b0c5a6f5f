#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

// The binary under test; the ctest harness exports QLB_BIN.
std::string cli_path() {
  const char* p = std::getenv("QLB_BIN");
  REQUIRE_MESSAGE(p != nullptr, "QLB_BIN must point at the qlb binary");
  return p;
}

fs::path work_dir() {
  const fs::path d = fs::temp_directory_path() / "qlb_cli_tests";
  fs::create_directories(d);
  return d;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = work_dir() / name;
  std::ofstream f(p, std::ios::binary);
  f << text;
  REQUIRE(f.good());
  return p;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct CliResult {
  int exitCode = -1;
  std::string out;
  std::string err;
};

// envPrefix is a shell `NAME=value` assignment list, e.g. "QLB_MAX_ORBIT=5".
CliResult run_cli(const std::string& args, const std::string& envPrefix = "") {
  const fs::path outP = work_dir() / "stdout.txt";
  const fs::path errP = work_dir() / "stderr.txt";
  std::string cmd;
  if (!envPrefix.empty()) cmd += "env " + envPrefix + " ";
  cmd += cli_path() + " " + args + " > " + outP.string() + " 2> " +
         errP.string();
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return CliResult{WEXITSTATUS(status), read_file(outP), read_file(errP)};
}

// Non-comment lines of a CSV artifact, in order.
std::vector<std::string> csv_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

// Minimal RFC-4180 split: honours quoted cells and doubled quotes.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cells.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      cells.emplace_back();
    } else {
      cells.back() += ch;
    }
  }
  return cells;
}

const char* kVerifyConfig = R"({
  "experiment": "verify",
  "n": 4, "q": 3, "dim_w": 2, "T": 2,
  "seed_partition": "*1,2/3/4",
  "rng_seed": 11,
  "commutator_samples": 40,
  "vector_samples": 10
})";

} // namespace

TEST_CASE("cli verify passes and lists every check") {
  const fs::path cfg = write_file("verify.json", kVerifyConfig);
  const fs::path art = work_dir() / "verify_out.json";
  const CliResult r =
      run_cli("verify --config " + cfg.string() + " --out " + art.string());
  CHECK(r.exitCode == 0);
  const nlohmann::json j = nlohmann::json::parse(read_file(art));
  CHECK(j.at("schema_version").get<int>() == 1);
  CHECK(j.at("experiment").get<std::string>() == "verify");
  CHECK(j.at("all_pass").get<bool>());
  CHECK(!j.at("config").contains("out"));
  CHECK(j.at("config").at("rng_seed").get<std::uint64_t>() == 11);
  const auto& checks = j.at("checks");
  CHECK(checks.size() >= 10);
  bool sawUnitarity = false;
  for (const auto& c : checks) {
    CHECK(c.contains("check_name"));
    CHECK(c.contains("value"));
    CHECK(c.contains("bound"));
    CHECK(c.at("pass").get<bool>());
    if (c.at("check_name") == "algorithm.unitarity") sawUnitarity = true;
  }
  CHECK(sawUnitarity);
}

TEST_CASE("cli corrupted unitary fails the named check with exit 1") {
  std::string text = kVerifyConfig;
  text.insert(text.rfind('}'), R"(, "corrupt_unitary": true)");
  const fs::path cfg = write_file("corrupt.json", text);
  const fs::path art = work_dir() / "corrupt_out.json";
  const CliResult r =
      run_cli("verify --config " + cfg.string() + " --out " + art.string());
  CHECK(r.exitCode == 1);
  const nlohmann::json j = nlohmann::json::parse(read_file(art));
  CHECK(!j.at("all_pass").get<bool>());
  bool unitarityFailed = false;
  for (const auto& c : j.at("checks")) {
    if (c.at("check_name") == "algorithm.unitarity")
      unitarityFailed = !c.at("pass").get<bool>();
  }
  CHECK(unitarityFailed);
}

TEST_CASE("cli malformed seed partition exits 2") {
  const fs::path cfg = write_file(
      "bad_seed.json", R"({"experiment": "verify", "seed_partition": "1,2//3"})");
  const CliResult r = run_cli("verify --config " + cfg.string());
  CHECK(r.exitCode == 2);
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("cli rejects unknown keys and contradicting experiments") {
  const fs::path unknown =
      write_file("unknown.json", R"({"experiment": "verify", "bogus": 1})");
  CHECK(run_cli("verify --config " + unknown.string()).exitCode == 2);

  const fs::path contra =
      write_file("contra.json", R"({"experiment": "orbit", "n": 4})");
  CHECK(run_cli("verify --config " + contra.string()).exitCode == 2);
}

TEST_CASE("cli orbit cap exits 3 and QLB_MAX_ORBIT overrides the config") {
  std::string text = kVerifyConfig;
  text.insert(text.rfind('}'), R"(, "orbit_cap": 2)");
  const fs::path small = write_file("small_cap.json", text);
  CHECK(run_cli("verify --config " + small.string()).exitCode == 3);

  const fs::path cfg = write_file("verify_env.json", kVerifyConfig);
  CHECK(run_cli("verify --config " + cfg.string(), "QLB_MAX_ORBIT=2")
            .exitCode == 3);
  const CliResult bad =
      run_cli("verify --config " + cfg.string(), "QLB_MAX_ORBIT=2x");
  CHECK(bad.exitCode == 2);
  CHECK(bad.err.find("QLB_MAX_ORBIT") != std::string::npos);
}

TEST_CASE("cli outputs are byte-identical for a fixed config and seed") {
  const fs::path cfg = write_file("traj.json", R"({
    "experiment": "trajectory",
    "seed_partition": "*1,2/3/4/5/6",
    "q": 2, "dim_w": 1, "T": 3,
    "algorithm": "blind_sequential"
  })");
  const fs::path a = work_dir() / "traj_a.csv";
  const fs::path b = work_dir() / "traj_b.csv";
  CHECK(run_cli("trajectory --config " + cfg.string() + " --out " + a.string())
            .exitCode == 0);
  CHECK(run_cli("trajectory --config " + cfg.string() + " --out " + b.string())
            .exitCode == 0);
  CHECK(read_file(a) == read_file(b));

  const fs::path v = write_file("verify_seed.json", kVerifyConfig);
  const CliResult r1 = run_cli("verify --config " + v.string() + " --seed 7");
  const CliResult r2 = run_cli("verify --config " + v.string() + " --seed 7");
  CHECK(r1.out == r2.out);
  const nlohmann::json j = nlohmann::json::parse(r1.out);
  CHECK(j.at("config").at("rng_seed").get<std::uint64_t>() == 7);
}

TEST_CASE("cli empty n list produces a header-only csv") {
  const fs::path cfg = write_file(
      "empty_sweep.json", R"({"experiment": "anticoncentration", "n_list": []})");
  const CliResult r = run_cli("anticoncentration --config " + cfg.string());
  CHECK(r.exitCode == 0);
  const auto lines = csv_lines(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] ==
        "n,t,k,flavor,gamma,rank,gamma_times_n,gamma_times_sqrt_n,status");
}

TEST_CASE("cli sweep at t=0 reproduces the inverse root orbit size") {
  const fs::path cfg = write_file("t0_sweep.json", R"({
    "experiment": "anticoncentration",
    "n_list": [4], "q": 2, "t": 0,
    "orbit_family": "ed", "gamma_flavor": "minus"
  })");
  const CliResult r = run_cli("anticoncentration --config " + cfg.string());
  CHECK(r.exitCode == 0);
  const auto lines = csv_lines(r.out);
  REQUIRE(lines.size() == 2);
  const auto row = split_csv(lines[1]);
  REQUIRE(row.size() == 9);
  CHECK(row[0] == "4");
  CHECK(row[1] == "0");
  CHECK(row[8] == "ok");
  // The ED orbit at n=4 has 6 members, so gamma must equal 1/sqrt(6).
  CHECK(std::stod(row[4]) == doctest::Approx(0.40824829046386307).epsilon(1e-14));
}

TEST_CASE("cli sweep marks cap-exceeded rows as skipped") {
  const fs::path cfg = write_file("skip_sweep.json", R"({
    "experiment": "anticoncentration",
    "n_list": [4, 6], "q": 2,
    "orbit_family": "ed", "orbit_cap": 10
  })");
  const CliResult r = run_cli("anticoncentration --config " + cfg.string());
  CHECK(r.exitCode == 0);
  const auto lines = csv_lines(r.out);
  REQUIRE(lines.size() == 3);
  const auto ok = split_csv(lines[1]);
  const auto skipped = split_csv(lines[2]);
  CHECK(ok[0] == "4");
  CHECK(ok[8] == "ok");
  CHECK(skipped[0] == "6");
  CHECK(skipped[4].empty());
  CHECK(skipped[8] == "skipped");
}

TEST_CASE("cli orbit command reports hierarchy sizes") {
  const fs::path cfg = write_file(
      "orbit.json", R"({"experiment": "orbit", "seed_partition": "*1,2/3/4/5/6"})");
  const CliResult r = run_cli("orbit --config " + cfg.string());
  CHECK(r.exitCode == 0);
  const auto lines = csv_lines(r.out);
  REQUIRE(lines.size() == 3);
  const auto l1 = split_csv(lines[1]);
  const auto l2 = split_csv(lines[2]);
  CHECK(l1[0] == "1");
  CHECK(l1[1] == "*1/2/3/4/5/6");
  CHECK(l1[2] == "6");
  CHECK(l1[3] == "1");
  CHECK(l2[0] == "2");
  CHECK(l2[1] == "*1,2/3/4/5/6");
  CHECK(l2[2] == "15");
  CHECK(l2[3] == "15");
  CHECK(l2[4].empty());
}

TEST_CASE("cli trajectory framework footer reports the measured success") {
  const fs::path cfg = write_file("framework.json", R"({
    "experiment": "trajectory",
    "seed_partition": "*1,2/3/4",
    "q": 3, "dim_w": 6, "T": 1,
    "algorithm": "random", "measurement": true, "rng_seed": 9
  })");
  const CliResult r = run_cli("trajectory --config " + cfg.string());
  CHECK(r.exitCode == 0);
  std::string footer;
  std::stringstream ss(r.out);
  std::string line;
  while (std::getline(ss, line))
    if (line.rfind("# framework", 0) == 0) footer = line;
  REQUIRE(!footer.empty());
  CHECK(footer.find(" pass") != std::string::npos);
  const auto mpos = footer.find("measured=");
  REQUIRE(mpos != std::string::npos);
  const double measured = std::stod(footer.substr(mpos + 9));
  // A random one-query run lands near the 1/6 orbit share, never at zero.
  CHECK(measured > 0.05);
  CHECK(measured < 0.34);
}

TEST_CASE("cli relaxed-vs-strict passes exhaustively") {
  const fs::path cfg = write_file("rvs.json", R"({
    "experiment": "relaxed-vs-strict",
    "n": 3, "k": 2, "q": 4, "dim_w": 3, "T": 1, "rng_seed": 3
  })");
  const CliResult r = run_cli("relaxed-vs-strict --config " + cfg.string());
  CHECK(r.exitCode == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("pass").get<bool>());
  CHECK(j.at("p_collision").get<double>() == doctest::Approx(0.25));
  // 3 orbit members, each lifted over 4^2 block-value vectors.
  CHECK(j.at("total_count").get<int>() == 48);
  CHECK(j.at("injective_count").get<int>() == 36);
}
