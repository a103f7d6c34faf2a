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

#include "qetsim/model.hpp"

namespace qetsim {

inline constexpr double kDefaultSeparabilityTol = 1e-9;

struct SeparabilityResult {
  bool separable;
  double residual;  // operator norm of the difference of the normalized
                    // conditional environment states
};

struct CorrelationReport {
  double entanglement;      // >= 0
  bool separable;
  double fidelity_term;     // F(rho0, rho1) of the normalized diagonal blocks
  Complex coherence;        // sqrt(p0 p1)-stripped off-diagonal trace
  double condition_residual;
};

/// Entanglement of a qubit + environment state of pure-dephasing form:
/// 4 p0 p1 [1 - F(rho0, rho1)], where p_i are the diagonal-block traces and
/// rho_i the normalized diagonal blocks. States that are not of
/// pure-dephasing form are rejected rather than scored.
double dephasing_entanglement(const BlockState& rho_qe);

/// Same measure with the weight fixed to 1 for a dephased Bell pair + its
/// environment (labels {00, 11}, weights 1/2): 1 - F(rho_00, rho_11).
double bell_pair_entanglement(const BlockState& bce);

/// Checks the proportionality between the post-teleportation qubit measure
/// and the Bell-pair measure: |e_ce - 4 |alpha|^2 |beta|^2 e_bce| < tol.
bool entanglement_ratio_check(double e_ce, double e_bce, const PureQubit& psi,
                              double tol = 1e-10);

/// Separability of a pure-dephasing qubit + environment state: the two
/// normalized conditional environment states must be equal within atol in
/// operator norm.
SeparabilityResult separability_check(
    const BlockState& rho_qe, double atol = kDefaultSeparabilityTol);

CorrelationReport correlation_report(
    const BlockState& rho_qe, double atol = kDefaultSeparabilityTol);

}  // namespace qetsim
