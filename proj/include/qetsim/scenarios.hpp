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

#include <vector>

#include "qetsim/model.hpp"

namespace qetsim::scenarios {

/// Single-qubit-environment scenario with fully asymmetric coupling: both
/// interactions act only on the 00 pointer label (all other conditional
/// operators are the identity).
///
/// The first interaction is diagonal in the environment basis,
/// w00(tau) = diag(e^{i phi0 tau}, e^{i phi1 tau}); the second is diagonal in
/// the rotated basis |a> = x|0> + y|1>, |b> = conj(y)|0> - conj(x)|1> with
/// phase rates phia, phib. Both are returned in generator form so one object
/// serves a whole time sweep.
struct ScenarioConfig {
  double c0 = 0.5;  // environment weight of |0><0|; c1 = 1 - c0
  double phi0 = 0.0;
  double phi1 = 1.5707963267948966;  // phi1 * tau = pi/2 at tau = 1
  Complex x{0.70710678118654752440, 0.0};
  Complex y{0.70710678118654752440, 0.0};
  double phia = 0.0;
  double phib = 1.0;
  double tau = 1.0;
  std::vector<double> t_grid;  // empty means the preset default grid
  PureQubit psi{0.70710678118654752440, 0.70710678118654752440};

  void validate() const;  // |x|^2 + |y|^2 = 1 within 1e-12, c0 in [0, 1]
  EnvDensity environment() const;
};

enum class Branch { Phi, Psi };

struct Interactions {
  DephasingInteraction first;
  DephasingInteraction second;
};

Interactions build_interactions(const ScenarioConfig& cfg);

/// Closed-form degree of coherence of the teleported qubit after the second
/// step, with + phases for the Phi branch and - phases for the Psi branch.
Complex closed_form_coherence(const ScenarioConfig& cfg, double t,
                              Branch branch);

/// Closed-form entanglement of the two branch states for the equal-interaction
/// scenario (first == second, tau == t).
double closed_form_phi_entanglement(const ScenarioConfig& cfg, double t);

struct Fig1Row {
  double x2;
  double phib_t;
  double abs_c_phi;
  double abs_c_psi;
};

struct Fig1Result {
  std::vector<Fig1Row> rows;        // engine values
  double max_closed_form_residual;  // |engine - closed form| over all rows
};

/// Coherence sweep: maximally mixed environment, phi0 = phia = 0,
/// phi1 * tau = pi/2, one row per (|x|^2, phib * t) grid point.
Fig1Result fig1_table(const ScenarioConfig& base,
                      const std::vector<double>& x2_values = {0.1, 0.3, 0.5});

struct Fig2Row {
  double c0;
  double phase_t;  // (phia - phib) * t
  double e_phi;
  double e_psi;
  double e_diff;
};

struct Fig2Result {
  std::vector<Fig2Row> rows;        // engine values
  double max_closed_form_residual;  // |engine E - direct-block E| over rows
};

/// Entanglement sweep with equal first/second interactions and tau = t, one
/// row per (c0, (phia - phib) * t) grid point.
Fig2Result fig2_table(const ScenarioConfig& base,
                      const std::vector<double>& c0_values = {0.6, 0.7, 0.8,
                                                              0.9, 1.0});

/// 201 points over [0, 2 pi] of the swept phase product.
std::vector<double> default_grid(double rate);

}  // namespace qetsim::scenarios
