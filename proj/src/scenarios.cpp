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

#include "qetsim/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qetsim/entanglement.hpp"
#include "qetsim/protocol.hpp"

namespace qetsim::scenarios {

namespace {

// Generator whose exponential over t is e^{i phia t}|a><a| + e^{i phib t}|b><b|.
ComplexMatrix rotated_generator(Complex x, Complex y, double phia,
                                double phib) {
  Eigen::Vector2cd a, b;
  a << x, y;
  b << std::conj(y), -std::conj(x);
  return (-phia * (a * a.adjoint()) - phib * (b * b.adjoint())).eval();
}

DephasingInteraction asymmetric_interaction(const ComplexMatrix& generator00) {
  std::map<std::string, ComplexMatrix> ops;
  ops["00"] = generator00;
  for (const char* label : {"01", "10", "11"}) {
    ops[label] = ComplexMatrix::Zero(2, 2);
  }
  return DephasingInteraction(DephasingInteraction::Form::Generator,
                              std::move(ops));
}

// One protocol run of the scenario: first dephasing at (first, tau1), second
// at (second, t), both branch coherences via the exact psi stripping.
struct BranchStates {
  BlockState phi;
  BlockState psi;
};

BranchStates branch_states(const ScenarioConfig& cfg,
                           const DephasingInteraction& first, double tau1,
                           const DephasingInteraction& second, double t) {
  MeasureResult s1 =
      step1(cfg.psi, cfg.environment(), first, tau1, BellOutcome::PhiPlus);
  BlockState sigma_prime = redephase(s1.state, second, t);
  MeasureResult phi = step2_noisy(sigma_prime, BellOutcome::PhiPlus);
  MeasureResult psi = step2_noisy(sigma_prime, BellOutcome::PsiPlus);
  auto reduce = [](const BlockState& s) {
    return s.trace_out("B").trace_out("C");
  };
  return BranchStates{reduce(phi.state), reduce(psi.state)};
}

}  // namespace

void ScenarioConfig::validate() const {
  const double norm = std::norm(x) + std::norm(y);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument(
        "ScenarioConfig: |x|^2 + |y|^2 must be 1 within 1e-12");
  }
  if (c0 < 0.0 || c0 > 1.0) {
    throw std::invalid_argument("ScenarioConfig: c0 must lie in [0, 1]");
  }
}

EnvDensity ScenarioConfig::environment() const {
  ComplexMatrix r = ComplexMatrix::Zero(2, 2);
  r(0, 0) = c0;
  r(1, 1) = 1.0 - c0;
  return EnvDensity(r);
}

Interactions build_interactions(const ScenarioConfig& cfg) {
  cfg.validate();
  ComplexMatrix v_first = ComplexMatrix::Zero(2, 2);
  v_first(0, 0) = -cfg.phi0;
  v_first(1, 1) = -cfg.phi1;
  return Interactions{
      asymmetric_interaction(v_first),
      asymmetric_interaction(rotated_generator(cfg.x, cfg.y, cfg.phia,
                                               cfg.phib))};
}

Complex closed_form_coherence(const ScenarioConfig& cfg, double t,
                              Branch branch) {
  cfg.validate();
  const double sign = (branch == Branch::Phi) ? 1.0 : -1.0;
  const double c1 = 1.0 - cfg.c0;
  const double x2 = std::norm(cfg.x);
  const double y2 = std::norm(cfg.y);
  auto phase = [](double arg) { return std::exp(Complex(0.0, arg)); };
  return x2 * (cfg.c0 * phase(cfg.phi0 * cfg.tau + sign * cfg.phia * t) +
               c1 * phase(cfg.phi1 * cfg.tau + sign * cfg.phib * t)) +
         y2 * (cfg.c0 * phase(cfg.phi0 * cfg.tau + sign * cfg.phib * t) +
               c1 * phase(cfg.phi1 * cfg.tau + sign * cfg.phia * t));
}

double closed_form_phi_entanglement(const ScenarioConfig& cfg, double t) {
  cfg.validate();
  // For equal interactions and tau = t the Phi-branch conditional states are
  // w00(2t) R(0) w00(2t)^dag and R(0).
  const ComplexMatrix w2t = linalg::expm_unitary(
      rotated_generator(cfg.x, cfg.y, cfg.phia, cfg.phib), 2.0 * t);
  const ComplexMatrix r0 = cfg.environment().matrix();
  const double weight =
      4.0 * std::norm(cfg.psi.alpha) * std::norm(cfg.psi.beta);
  const double fid =
      linalg::uhlmann_fidelity(w2t * r0 * w2t.adjoint(), r0);
  return weight * (1.0 - std::min(fid, 1.0));
}

std::vector<double> default_grid(double rate) {
  constexpr int kPoints = 201;
  if (rate <= 0.0) rate = 1.0;  // nothing swept; fall back to t in [0, 2 pi]
  std::vector<double> grid(kPoints);
  const double step = 2.0 * std::numbers::pi / (rate * (kPoints - 1));
  for (int i = 0; i < kPoints; ++i) grid[i] = i * step;
  return grid;
}

Fig1Result fig1_table(const ScenarioConfig& base,
                      const std::vector<double>& x2_values) {
  Fig1Result result;
  result.max_closed_form_residual = 0.0;
  for (double x2 : x2_values) {
    ScenarioConfig cfg = base;
    cfg.x = std::sqrt(x2);
    cfg.y = std::sqrt(1.0 - x2);
    cfg.validate();
    const std::vector<double> grid =
        cfg.t_grid.empty() ? default_grid(std::abs(cfg.phib)) : cfg.t_grid;
    Interactions inter = build_interactions(cfg);
    for (double t : grid) {
      BranchStates branches =
          branch_states(cfg, inter.first, cfg.tau, inter.second, t);
      const Complex c_phi = qubit_coherence(branches.phi, cfg.psi);
      const Complex c_psi = qubit_coherence(branches.psi, cfg.psi);
      const Complex ref_phi = closed_form_coherence(cfg, t, Branch::Phi);
      const Complex ref_psi = closed_form_coherence(cfg, t, Branch::Psi);
      result.max_closed_form_residual =
          std::max({result.max_closed_form_residual, std::abs(c_phi - ref_phi),
                    std::abs(c_psi - ref_psi)});
      result.rows.push_back(
          Fig1Row{x2, cfg.phib * t, std::abs(c_phi), std::abs(c_psi)});
    }
  }
  return result;
}

Fig2Result fig2_table(const ScenarioConfig& base,
                      const std::vector<double>& c0_values) {
  Fig2Result result;
  result.max_closed_form_residual = 0.0;
  for (double c0 : c0_values) {
    ScenarioConfig cfg = base;
    cfg.c0 = c0;
    cfg.validate();
    const double rate = std::abs(cfg.phia - cfg.phib);
    const std::vector<double> grid =
        cfg.t_grid.empty() ? default_grid(rate) : cfg.t_grid;
    // both dephasing windows use the same interaction, over equal times
    Interactions inter = build_interactions(cfg);
    for (double t : grid) {
      BranchStates branches =
          branch_states(cfg, inter.second, t, inter.second, t);
      const double e_phi = dephasing_entanglement(branches.phi);
      const double e_psi = dephasing_entanglement(branches.psi);
      result.max_closed_form_residual =
          std::max(result.max_closed_form_residual,
                   std::abs(e_phi - closed_form_phi_entanglement(cfg, t)));
      result.rows.push_back(
          Fig2Row{c0, (cfg.phia - cfg.phib) * t, e_phi, e_psi, e_phi - e_psi});
    }
  }
  return result;
}

}  // namespace qetsim::scenarios
