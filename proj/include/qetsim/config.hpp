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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qetsim/model.hpp"
#include "qetsim/scenarios.hpp"

namespace qetsim::cli {

/// Thrown for malformed or invalid configuration; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Mode { Fig1, Fig2, Custom, Verify };

struct CustomConfig {
  PureQubit psi{1.0, 0.0};
  EnvDensity env{ComplexMatrix::Identity(1, 1)};
  DephasingInteraction interaction1{
      DephasingInteraction::identity(1)};
  double tau = 1.0;
  BellOutcome outcome1 = BellOutcome::PhiPlus;
  std::optional<DephasingInteraction> interaction2;
  double t = 0.0;
  std::optional<BellOutcome> outcome2;
  bool noisy_second = false;
  std::string stages_csv;  // empty: no per-stage matrix dump
};

struct FigConfig {
  scenarios::ScenarioConfig base;  // base.t_grid overrides the default grid
  std::vector<double> x2_values = {0.1, 0.3, 0.5};           // fig1
  std::vector<double> c0_values = {0.6, 0.7, 0.8, 0.9, 1.0}; // fig2
};

struct RunConfig {
  Mode mode;
  FigConfig fig;
  std::optional<CustomConfig> custom;
  std::uint64_t seed = 20210701;
  int instances = 100;
  bool corrupt_correction = false;
  std::string output_path;  // CSV (fig modes) or summary JSON (verify)
  std::map<std::string, double> tolerances;
};

/// Parses the JSON config file for the given mode. Complex numbers are
/// [re, im] pairs, matrices row-major nested arrays of them.
RunConfig load_config(Mode mode, const std::string& path);

/// Config defaults when no file is given.
RunConfig default_config(Mode mode);

/// Applies a NAME=VALUE tolerance override.
void apply_tolerance_override(RunConfig& config, const std::string& spec);

}  // namespace qetsim::cli
