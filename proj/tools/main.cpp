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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qetsim/commands.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::vector<std::string> tolerance_specs;
};

void add_common_options(CLI::App* sub, CommonArgs& args) {
  sub->add_option("--config", args.config_path, "JSON config file");
  sub->add_option("--out", args.out_path, "output file path");
  sub->add_option("--seed", args.seed, "seed for randomized suites")
      ->each([&args](const std::string&) { args.seed_set = true; });
  sub->add_option("--tol", args.tolerance_specs,
                  "tolerance override NAME=VALUE (repeatable)");
}

int build_and_run(qetsim::cli::Mode mode, const CommonArgs& args,
                  int instances, bool corrupt_correction) {
  using namespace qetsim::cli;
  RunConfig config;
  try {
    config = load_config(mode, args.config_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  if (!args.out_path.empty()) config.output_path = args.out_path;
  if (args.seed_set) config.seed = args.seed;
  if (instances > 0) config.instances = instances;
  config.corrupt_correction = corrupt_correction;
  try {
    for (const auto& spec : args.tolerance_specs) {
      apply_tolerance_override(config, spec);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return run_command(config, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qetsim: bidirectional qubit teleportation with an explicitly tracked "
      "dephasing environment"};
  app.require_subcommand(1);

  CommonArgs fig1_args, fig2_args, custom_args, verify_args;
  int verify_instances = 0;
  bool corrupt_correction = false;

  CLI::App* fig1 = app.add_subcommand(
      "fig1", "coherence of the re-teleported qubit vs the second dephasing "
              "time, per Bell-outcome branch (CSV)");
  add_common_options(fig1, fig1_args);

  CLI::App* fig2 = app.add_subcommand(
      "fig2", "branch entanglement vs the second dephasing time for a "
              "single-qubit environment (CSV)");
  add_common_options(fig2, fig2_args);

  CLI::App* custom = app.add_subcommand(
      "custom", "run the full protocol on user-supplied states and "
                "interactions and report per-stage quantities");
  add_common_options(custom, custom_args);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the randomized property suites (oracle equivalence, "
                "round trip, probabilities, coherence, entanglement)");
  add_common_options(verify, verify_args);
  verify->add_option("--instances", verify_instances,
                     "randomized instances per suite");
  verify->add_flag("--corrupt-correction", corrupt_correction,
                   "negative control: sabotage the teleportation correction "
                   "so the round-trip suite must fail");

  CLI11_PARSE(app, argc, argv);

  if (fig1->parsed()) {
    return build_and_run(qetsim::cli::Mode::Fig1, fig1_args, 0, false);
  }
  if (fig2->parsed()) {
    return build_and_run(qetsim::cli::Mode::Fig2, fig2_args, 0, false);
  }
  if (custom->parsed()) {
    return build_and_run(qetsim::cli::Mode::Custom, custom_args, 0, false);
  }
  return build_and_run(qetsim::cli::Mode::Verify, verify_args,
                       verify_instances, corrupt_correction);
}
