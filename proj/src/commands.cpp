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

#include "qetsim/commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "qetsim/entanglement.hpp"
#include "qetsim/protocol.hpp"
#include "qetsim/verify.hpp"

namespace qetsim::cli {

namespace {

// 17 significant digits round-trips doubles exactly.
std::string format_value(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  out << header << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << format_value(row[i]);
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

double fig_residual_tolerance(const RunConfig& config) {
  auto it = config.tolerances.find("fig_residual");
  return it == config.tolerances.end() ? 1e-10 : it->second;
}

std::string format_complex(Complex z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag())
     << "i";
  return os.str();
}

void report_qubit_env(std::ostream& out, const char* qubit,
                      const BlockState& rho_qe, const PureQubit& psi) {
  CorrelationReport report = correlation_report(rho_qe);
  const Complex c = qubit_coherence(rho_qe, psi);
  out << "  " << qubit << "-qubit coherence factor: " << format_complex(c)
      << "  (|c| = " << std::abs(c) << ")\n";
  out << "  qubit-environment entanglement E = " << report.entanglement
      << "\n";
  out << "  separable: " << (report.separable ? "yes" : "no")
      << "  (condition residual " << report.condition_residual << ")\n";
}

void dump_stages_csv(const std::string& path, const StageTrace& trace) {
  std::vector<std::vector<double>> rows;
  std::ostringstream header;
  header << "stage,row,col,re,im";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << header.str() << "\n";
  for (std::size_t s = 0; s < trace.size(); ++s) {
    const ComplexMatrix m = trace[s].state.to_full();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        out << trace[s].stage << "," << r << "," << c << ","
            << format_value(m(r, c).real()) << ","
            << format_value(m(r, c).imag()) << "\n";
      }
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

verify::Options verify_options(const RunConfig& config) {
  verify::Options opts;
  opts.seed = config.seed;
  opts.instances = config.instances;
  opts.corrupt_correction = config.corrupt_correction;
  opts.tol_overrides = config.tolerances;
  return opts;
}

}  // namespace

int cmd_fig1(const RunConfig& config, std::ostream& out) {
  scenarios::Fig1Result result =
      scenarios::fig1_table(config.fig.base, config.fig.x2_values);

  std::vector<std::vector<double>> rows;
  rows.reserve(result.rows.size());
  for (const auto& row : result.rows) {
    rows.push_back({row.x2, row.phib_t, row.abs_c_phi, row.abs_c_psi});
  }
  write_csv(config.output_path, "x2,phib_t,abs_c_phi,abs_c_psi", rows);

  const double tol = fig_residual_tolerance(config);
  out << "fig1: wrote " << rows.size() << " rows to " << config.output_path
      << "\n";
  out << "fig1: max closed-form-vs-engine residual = "
      << format_value(result.max_closed_form_residual) << " (tolerance "
      << format_value(tol) << ")\n";
  return result.max_closed_form_residual <= tol ? kExitOk
                                                : kExitToleranceFailure;
}

int cmd_fig2(const RunConfig& config, std::ostream& out) {
  scenarios::Fig2Result result =
      scenarios::fig2_table(config.fig.base, config.fig.c0_values);

  std::vector<std::vector<double>> rows;
  rows.reserve(result.rows.size());
  for (const auto& row : result.rows) {
    rows.push_back({row.c0, row.phase_t, row.e_phi, row.e_psi, row.e_diff});
  }
  write_csv(config.output_path, "c0,phase_t,E_phi,E_psi,E_diff", rows);

  const double tol = fig_residual_tolerance(config);
  out << "fig2: wrote " << rows.size() << " rows to " << config.output_path
      << "\n";
  out << "fig2: max closed-form-vs-engine residual = "
      << format_value(result.max_closed_form_residual) << " (tolerance "
      << format_value(tol) << ")\n";
  return result.max_closed_form_residual <= tol ? kExitOk
                                                : kExitToleranceFailure;
}

int cmd_custom(const RunConfig& config, std::ostream& out) {
  if (!config.custom) throw ConfigError("custom mode requires a config");
  const CustomConfig& custom = *config.custom;

  std::optional<SecondStep> second;
  if (custom.outcome2) {
    second = SecondStep{
        custom.interaction2 ? *custom.interaction2
                            : DephasingInteraction::identity(custom.env.dim()),
        custom.t, *custom.outcome2, custom.noisy_second};
  }

  StageTrace trace = run_pipeline(custom.psi, custom.env, custom.interaction1,
                                  custom.tau, custom.outcome1, second);

  out << "custom run: d_E = " << custom.env.dim() << ", tau = " << custom.tau;
  if (second && second->noisy) out << ", t = " << custom.t;
  out << "\n";
  out << "psi: alpha = " << format_complex(custom.psi.alpha)
      << ", beta = " << format_complex(custom.psi.beta) << "\n";

  for (const auto& record : trace) {
    out << "stage " << record.stage;
    if (record.outcome) out << " [outcome " << to_string(*record.outcome) << "]";
    if (record.outcome) out << ": probability = " << record.probability;
    out << "\n";
    if (record.stage == "dephased") {
      const Complex c = bell_coherence(record.state.trace_out("A"));
      out << "  Bell-state coherence c = " << format_complex(c)
          << "  (|c| = " << std::abs(c) << ")\n";
    } else if (record.stage == "step1") {
      report_qubit_env(out, "C",
                       record.state.trace_out("A").trace_out("B"), custom.psi);
    } else if (record.stage == "step2") {
      const BlockState ae = record.state.trace_out("B").trace_out("C");
      report_qubit_env(out, "A", ae, custom.psi);
      const double fidelity = linalg::uhlmann_fidelity(
          ae.system_density(), custom.psi.density());
      out << "  fidelity of the teleported qubit vs psi: " << fidelity << "\n";
    }
  }

  if (!custom.stages_csv.empty()) {
    dump_stages_csv(custom.stages_csv, trace);
    out << "wrote per-stage density matrices to " << custom.stages_csv << "\n";
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  verify::Options opts = verify_options(config);
  std::vector<verify::SuiteResult> results = verify::run_all(opts);

  bool all_passed = true;
  nlohmann::json summary;
  summary["seed"] = opts.seed;
  summary["instances"] = opts.instances;
  for (const auto& result : results) {
    all_passed = all_passed && result.passed;
    out << "suite " << result.name << ": "
        << (result.passed ? "PASS" : "FAIL")
        << "  max_residual = " << format_value(result.max_residual)
        << "  tolerance = " << format_value(result.tolerance);
    if (!result.detail.empty()) out << "  (" << result.detail << ")";
    out << "\n";
    summary["suites"][result.name] = {{"passed", result.passed},
                                      {"max_residual", result.max_residual},
                                      {"tolerance", result.tolerance}};
  }
  summary["passed"] = all_passed;
  out << summary.dump() << "\n";
  if (!config.output_path.empty()) {
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " +
                                        config.output_path);
    file << summary.dump(2) << "\n";
  }
  if (!all_passed) {
    for (const auto& result : results) {
      if (!result.passed) {
        out << "verify failed: suite " << result.name << " at seed "
            << opts.seed << "\n";
      }
    }
    return kExitToleranceFailure;
  }
  return kExitOk;
}

int run_command(const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  try {
    switch (config.mode) {
      case Mode::Fig1:
        return cmd_fig1(config, out);
      case Mode::Fig2:
        return cmd_fig2(config, out);
      case Mode::Custom:
        return cmd_custom(config, out);
      case Mode::Verify:
        return cmd_verify(config, out);
    }
    err << "unknown mode\n";
    return kExitConfigError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitToleranceFailure;
  }
}

}  // namespace qetsim::cli
