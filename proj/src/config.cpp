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

#include "qetsim/config.hpp"

#include <fstream>

#include <json.hpp>

namespace qetsim::cli {

namespace {

using nlohmann::json;

Complex parse_complex(const json& j, const std::string& where) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  throw ConfigError(where + ": expected a number or an [re, im] pair");
}

ComplexMatrix parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw ConfigError(where + ": expected a non-empty nested array");
  }
  const std::size_t rows = j.size();
  ComplexMatrix m;
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array()) throw ConfigError(where + ": rows must be arrays");
    if (r == 0) m.resize(rows, row.size());
    if (row.size() != std::size_t(m.cols())) {
      throw ConfigError(where + ": ragged rows");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      m(Eigen::Index(r), Eigen::Index(c)) =
          parse_complex(row[c], where + " entry");
    }
  }
  return m;
}

PureQubit parse_psi(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    throw ConfigError(where + ": expected [alpha, beta]");
  }
  try {
    return PureQubit(parse_complex(j[0], where + ".alpha"),
                     parse_complex(j[1], where + ".beta"));
  } catch (const std::invalid_argument& err) {
    throw ConfigError(where + ": " + err.what());
  }
}

DephasingInteraction parse_interaction(const json& j,
                                       const std::string& where) {
  if (!j.is_object() || !j.contains("form") || !j.contains("ops")) {
    throw ConfigError(where + ": expected {form, ops}");
  }
  const std::string form_name = j.at("form").get<std::string>();
  DephasingInteraction::Form form;
  if (form_name == "unitary") {
    form = DephasingInteraction::Form::Unitary;
  } else if (form_name == "generator") {
    form = DephasingInteraction::Form::Generator;
  } else {
    throw ConfigError(where + ".form: expected 'unitary' or 'generator'");
  }
  std::map<std::string, ComplexMatrix> ops;
  for (const auto& [label, value] : j.at("ops").items()) {
    ops[label] = parse_matrix(value, where + ".ops." + label);
  }
  try {
    return DephasingInteraction(form, std::move(ops));
  } catch (const std::invalid_argument& err) {
    throw ConfigError(where + ": " + err.what());
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& err) {
    throw ConfigError("config is not valid JSON: " + std::string(err.what()));
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");
  return j;
}

void parse_scenario_overrides(const json& j, scenarios::ScenarioConfig& cfg) {
  if (j.contains("c0")) cfg.c0 = j.at("c0").get<double>();
  if (j.contains("phi0")) cfg.phi0 = j.at("phi0").get<double>();
  if (j.contains("phi1")) cfg.phi1 = j.at("phi1").get<double>();
  if (j.contains("phia")) cfg.phia = j.at("phia").get<double>();
  if (j.contains("phib")) cfg.phib = j.at("phib").get<double>();
  if (j.contains("tau")) cfg.tau = j.at("tau").get<double>();
  if (j.contains("x")) {
    cfg.x = parse_complex(j.at("x"), "x");
    cfg.y = std::sqrt(std::max(1.0 - std::norm(cfg.x), 0.0));
  }
  if (j.contains("y")) cfg.y = parse_complex(j.at("y"), "y");
  if (j.contains("psi")) cfg.psi = parse_psi(j.at("psi"), "psi");
  if (j.contains("t_grid")) {
    cfg.t_grid = j.at("t_grid").get<std::vector<double>>();
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& err) {
    throw ConfigError(err.what());
  }
}

}  // namespace

RunConfig default_config(Mode mode) {
  RunConfig config;
  config.mode = mode;
  switch (mode) {
    case Mode::Fig1:
      config.output_path = "fig1.csv";
      break;
    case Mode::Fig2:
      config.output_path = "fig2.csv";
      config.fig.base.phia = 0.5;
      config.fig.base.phib = -0.5;
      break;
    case Mode::Custom:
      config.custom = CustomConfig{};
      break;
    case Mode::Verify:
      break;
  }
  return config;
}

RunConfig load_config(Mode mode, const std::string& path) {
  RunConfig config = default_config(mode);
  if (path.empty()) return config;
  const json j = load_json(path);

  if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("instances")) config.instances = j.at("instances").get<int>();
  if (j.contains("out")) config.output_path = j.at("out").get<std::string>();
  if (j.contains("tolerances")) {
    for (const auto& [name, value] : j.at("tolerances").items()) {
      const double v = value.get<double>();
      if (v <= 0.0) throw ConfigError("tolerance '" + name + "' must be positive");
      config.tolerances[name] = v;
    }
  }

  switch (mode) {
    case Mode::Fig1:
      parse_scenario_overrides(j, config.fig.base);
      if (j.contains("x2_values")) {
        config.fig.x2_values = j.at("x2_values").get<std::vector<double>>();
        for (double x2 : config.fig.x2_values) {
          if (x2 < 0.0 || x2 > 1.0) throw ConfigError("x2_values must lie in [0, 1]");
        }
      }
      break;
    case Mode::Fig2:
      parse_scenario_overrides(j, config.fig.base);
      if (j.contains("c0_values")) {
        config.fig.c0_values = j.at("c0_values").get<std::vector<double>>();
        for (double c0 : config.fig.c0_values) {
          if (c0 < 0.0 || c0 > 1.0) throw ConfigError("c0_values must lie in [0, 1]");
        }
      }
      break;
    case Mode::Custom: {
      CustomConfig custom;
      if (!j.contains("psi")) throw ConfigError("custom mode requires 'psi'");
      custom.psi = parse_psi(j.at("psi"), "psi");
      if (!j.contains("env")) throw ConfigError("custom mode requires 'env'");
      try {
        custom.env = EnvDensity(parse_matrix(j.at("env"), "env"));
      } catch (const std::invalid_argument& err) {
        throw ConfigError(std::string("env: ") + err.what());
      }
      if (!j.contains("interaction1")) {
        throw ConfigError("custom mode requires 'interaction1'");
      }
      custom.interaction1 = parse_interaction(j.at("interaction1"), "interaction1");
      if (custom.interaction1.env_dim() != custom.env.dim()) {
        throw ConfigError("interaction1: environment dim does not match env");
      }
      if (j.contains("tau")) custom.tau = j.at("tau").get<double>();
      if (j.contains("outcome1")) {
        try {
          custom.outcome1 = parse_bell_outcome(j.at("outcome1").get<std::string>());
        } catch (const std::invalid_argument& err) {
          throw ConfigError(err.what());
        }
      }
      if (j.contains("outcome2")) {
        try {
          custom.outcome2 = parse_bell_outcome(j.at("outcome2").get<std::string>());
        } catch (const std::invalid_argument& err) {
          throw ConfigError(err.what());
        }
      }
      if (j.contains("interaction2")) {
        custom.interaction2 = parse_interaction(j.at("interaction2"), "interaction2");
        if (custom.interaction2->env_dim() != custom.env.dim()) {
          throw ConfigError("interaction2: environment dim does not match env");
        }
        custom.noisy_second = true;
        if (!custom.outcome2) {
          throw ConfigError("interaction2 given but 'outcome2' missing");
        }
      }
      if (j.contains("t")) custom.t = j.at("t").get<double>();
      if (j.contains("stages_csv")) {
        custom.stages_csv = j.at("stages_csv").get<std::string>();
      }
      config.custom = custom;
      break;
    }
    case Mode::Verify:
      if (j.contains("env_dims")) {
        // parsed later into verify options by the command
      }
      break;
  }
  return config;
}

void apply_tolerance_override(RunConfig& config, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
    throw ConfigError("--tol expects NAME=VALUE, got '" + spec + "'");
  }
  const std::string name = spec.substr(0, eq);
  double value = 0.0;
  try {
    value = std::stod(spec.substr(eq + 1));
  } catch (const std::exception&) {
    throw ConfigError("--tol " + name + ": value is not a number");
  }
  if (value <= 0.0) throw ConfigError("--tol " + name + ": value must be positive");
  config.tolerances[name] = value;
}

}  // namespace qetsim::cli
