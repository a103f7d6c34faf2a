// Copyright 2026 The qetsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qetsim/commands.hpp"

using namespace qetsim;
using namespace qetsim::cli;

namespace {

namespace fs = std::filesystem;

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() / "qetsim_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  const fs::path path = temp_dir() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_binary(const std::string& args) {
#ifdef QETSIM_CLI_BIN
  const std::string cmd = std::string(QETSIM_CLI_BIN) + " " + args +
                          " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
#else
  (void)args;
  return -1;
#endif
}

constexpr const char* kCustomIdentity = R"({
  "psi": [[0.6, 0.0], [0.0, 0.8]],
  "env": [[[0.5, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.5, 0.0]]],
  "interaction1": {
    "form": "unitary",
    "ops": {
      "00": [[[1,0],[0,0]],[[0,0],[1,0]]],
      "01": [[[1,0],[0,0]],[[0,0],[1,0]]],
      "10": [[[1,0],[0,0]],[[0,0],[1,0]]],
      "11": [[[1,0],[0,0]],[[0,0],[1,0]]]
    }
  },
  "tau": 1.0,
  "outcome1": "psi+",
  "outcome2": "phi-"
})";

}  // namespace

TEST_CASE("tolerance override parsing") {
  RunConfig config = default_config(Mode::Fig1);
  apply_tolerance_override(config, "fig_residual=1e-8");
  CHECK(config.tolerances.at("fig_residual") == doctest::Approx(1e-8));
  CHECK_THROWS_AS(apply_tolerance_override(config, "fig_residual"),
                  ConfigError);
  CHECK_THROWS_AS(apply_tolerance_override(config, "x=-1"), ConfigError);
  CHECK_THROWS_AS(apply_tolerance_override(config, "x=abc"), ConfigError);
}

TEST_CASE("config rejects invalid custom input naming the failing invariant") {
  const std::string bad_psi = write_file("bad_psi.json", R"({
    "psi": [[1.0, 0.0], [0.5, 0.0]],
    "env": [[[1.0, 0.0]]],
    "interaction1": {"form": "unitary", "ops": {"00": [[[1,0]]]}}
  })");
  CHECK_THROWS_WITH_AS(load_config(Mode::Custom, bad_psi),
                       doctest::Contains("alpha"), ConfigError);

  const std::string bad_env = write_file("bad_env.json", R"({
    "psi": [[1.0, 0.0], [0.0, 0.0]],
    "env": [[[0.9, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.5, 0.0]]],
    "interaction1": {"form": "unitary",
                     "ops": {"00": [[[1,0],[0,0]],[[0,0],[1,0]]]}}
  })");
  CHECK_THROWS_WITH_AS(load_config(Mode::Custom, bad_env),
                       doctest::Contains("trace"), ConfigError);

  const std::string bad_op = write_file("bad_op.json", R"({
    "psi": [[1.0, 0.0], [0.0, 0.0]],
    "env": [[[1.0, 0.0]]],
    "interaction1": {"form": "unitary", "ops": {"00": [[[2,0]]]}}
  })");
  CHECK_THROWS_WITH_AS(load_config(Mode::Custom, bad_op),
                       doctest::Contains("unitary"), ConfigError);

  const std::string bad_json = write_file("bad_json.json", "{not json");
  CHECK_THROWS_AS(load_config(Mode::Custom, bad_json), ConfigError);
  CHECK_THROWS_AS(load_config(Mode::Custom, "/nonexistent/q.json"),
                  ConfigError);
}

TEST_CASE("custom run with trivial interactions reports exact teleportation") {
  const std::string path = write_file("identity.json", kCustomIdentity);
  RunConfig config = load_config(Mode::Custom, path);
  std::ostringstream out;
  const int code = cmd_custom(config, out);
  CHECK(code == kExitOk);
  const std::string report = out.str();
  CHECK(report.find("probability = 0.25") != std::string::npos);
  CHECK(report.find("fidelity of the teleported qubit vs psi: 1") !=
        std::string::npos);
  CHECK(report.find("entanglement E = 0") != std::string::npos);
  CHECK(report.find("separable: yes") != std::string::npos);
}

TEST_CASE("fig1 command writes a deterministic CSV with the expected shape") {
  RunConfig config = default_config(Mode::Fig1);
  config.output_path = (temp_dir() / "fig1_a.csv").string();
  std::ostringstream out;
  CHECK(cmd_fig1(config, out) == kExitOk);

  const std::string first = read_file(config.output_path);
  CHECK(first.rfind("x2,phib_t,abs_c_phi,abs_c_psi\n", 0) == 0);
  CHECK(std::count(first.begin(), first.end(), '\n') == 1 + 3 * 201);
  CHECK(first.find("\r") == std::string::npos);

  config.output_path = (temp_dir() / "fig1_b.csv").string();
  std::ostringstream out2;
  CHECK(cmd_fig1(config, out2) == kExitOk);
  CHECK(read_file(config.output_path) == first);
}

TEST_CASE("fig2 command emits the branch-entanglement table") {
  RunConfig config = default_config(Mode::Fig2);
  config.output_path = (temp_dir() / "fig2.csv").string();
  std::ostringstream out;
  CHECK(cmd_fig2(config, out) == kExitOk);
  const std::string content = read_file(config.output_path);
  CHECK(content.rfind("c0,phase_t,E_phi,E_psi,E_diff\n", 0) == 0);
  CHECK(std::count(content.begin(), content.end(), '\n') == 1 + 5 * 201);
}

TEST_CASE("fig1 restricted to x2 = 0.5 yields identical branch columns") {
  RunConfig config = default_config(Mode::Fig1);
  config.fig.x2_values = {0.5};
  config.output_path = (temp_dir() / "fig1_half.csv").string();
  std::ostringstream out;
  CHECK(cmd_fig1(config, out) == kExitOk);
  std::ifstream in(config.output_path);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const auto c3 = line.find(',', c2 + 1);
    const std::string phi = line.substr(c2 + 1, c3 - c2 - 1);
    const std::string psi = line.substr(c3 + 1);
    CHECK(std::abs(std::stod(phi) - std::stod(psi)) < 1e-12);
  }
}

TEST_CASE("unwritable output path fails with a nonzero exit") {
  RunConfig config = default_config(Mode::Fig1);
  config.fig.x2_values = {0.5};
  config.fig.base.t_grid = {0.0, 1.0};
  config.output_path = "/nonexistent_dir/fig1.csv";
  std::ostringstream out, err;
  CHECK(run_command(config, out, err) != kExitOk);
}

TEST_CASE("verify command reports suites and honors the exit contract") {
  RunConfig config = default_config(Mode::Verify);
  config.instances = 4;
  std::ostringstream out;
  CHECK(cmd_verify(config, out) == kExitOk);
  const std::string report = out.str();
  for (const char* suite :
       {"round_trip", "outcome_probabilities", "coherence_transfer",
        "entanglement_proportionality", "separability_consistency",
        "branch_claims", "oracle_equivalence", "degenerate_inputs"}) {
    CHECK(report.find(suite) != std::string::npos);
  }
  CHECK(report.find("\"passed\":true") != std::string::npos);

  config.corrupt_correction = true;
  std::ostringstream out2;
  CHECK(cmd_verify(config, out2) == kExitToleranceFailure);
  CHECK(out2.str().find("round_trip: FAIL") != std::string::npos);
}

#ifdef QETSIM_CLI_BIN
TEST_CASE("binary: subcommands, exit codes and byte-identical reruns") {
  const fs::path dir = temp_dir();
  const std::string a = (dir / "bin_fig1_a.csv").string();
  const std::string b = (dir / "bin_fig1_b.csv").string();
  CHECK(run_binary("fig1 --out " + a) == 0);
  CHECK(run_binary("fig1 --out " + b) == 0);
  CHECK(read_file(a) == read_file(b));
  CHECK(read_file(a).size() > 1000);

  CHECK(run_binary("verify --instances 3") == 0);
  CHECK(run_binary("verify --instances 3 --corrupt-correction") == 1);
  CHECK(run_binary("custom --config /nonexistent/nope.json") == 2);
  const std::string custom = write_file("bin_custom.json", kCustomIdentity);
  CHECK(run_binary("custom --config " + custom) == 0);
  CHECK(run_binary("bogus_subcommand") != 0);
}
#endif
