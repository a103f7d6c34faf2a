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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qetsim/model.hpp"

namespace qetsim {

/// Measurement outcomes with probability below this are impossible branches.
inline constexpr double kProbabilityFloor = 1e-14;

struct MeasureResult {
  double probability;
  BlockState state;  // renormalized post-measurement state
};

/// Audit record of one protocol stage.
struct StageRecord {
  std::string stage;
  BlockState state;
  std::optional<BellOutcome> outcome;
  double probability = 1.0;
};

using StageTrace = std::vector<StageRecord>;

/// Conditional evolution of the environment, diagonal in the pointer basis of
/// the named qubit pair: block_{L,L'} -> w_{sub(L)} block w_{sub(L')}^dag,
/// where sub extracts the target-qubit bits of a label.
BlockState dephase(const BlockState& state,
                   const DephasingInteraction& interaction,
                   std::pair<std::string, std::string> target_qubits,
                   double duration);

/// Degree of coherence c = Tr_E of the environment block linking the 00 and
/// 11 labels of a dephased Bell pair (two-qubit + environment states only;
/// trace out spectator qubits first).
Complex bell_coherence(const BlockState& state);

/// Projective Bell measurement on a named qubit pair. The post state is
/// renormalized by the outcome probability; outcomes with probability below
/// kProbabilityFloor are reported impossible.
MeasureResult bell_measure(const BlockState& state,
                           std::pair<std::string, std::string> pair,
                           BellOutcome outcome);

/// Teleportation correction (I / Z / X / ZX for Phi+/Phi-/Psi+/Psi-) applied
/// to the named qubit.
BlockState pauli_correct(const BlockState& state, BellOutcome outcome,
                         std::string_view target);

/// Identifies the pure Bell state a qubit pair is in, or throws if the pair
/// is not in a definite Bell state within tol.
BellOutcome detect_bell_state(const BlockState& state,
                              std::pair<std::string, std::string> pair,
                              double tol = 1e-10);

/// First teleportation: prepare, dephase the B,C Bell resource for tau,
/// measure (A,B), correct C.
MeasureResult step1(const PureQubit& psi, const EnvDensity& env,
                    const DephasingInteraction& interaction, double tau,
                    BellOutcome outcome);

/// Back-teleportation with no further decoherence: measure (B,C), correct A.
/// The correction accounts for the Bell state the A,B resource pair is in
/// (detected from the input), so the C,E correlations land on A exactly for
/// every first-step outcome.
MeasureResult step2_clean(const BlockState& sigma_pm, BellOutcome outcome);

/// Second dephasing window: the interaction acts on the A,B pair for time t.
BlockState redephase(const BlockState& sigma_pm,
                     const DephasingInteraction& interaction2, double t);

/// Back-teleportation after the second dephasing. The A,B pair is no longer
/// in a pure Bell state, so the resource it started from cannot be detected
/// and is passed explicitly (the canonical pipeline uses Phi+).
MeasureResult step2_noisy(const BlockState& sigma_prime, BellOutcome outcome,
                          BellOutcome resource = BellOutcome::PhiPlus);

/// Dephasing factor of a qubit + environment state: the trace of the 0,1
/// environment block with the state-amplitude product divided out. Without
/// psi the product is taken as sqrt(p0 p1), which is exact whenever
/// alpha * conj(beta) is real non-negative; pass psi for exact stripping.
Complex qubit_coherence(const BlockState& rho_qe);
Complex qubit_coherence(const BlockState& rho_qe, const PureQubit& psi);

struct SecondStep {
  DephasingInteraction interaction;
  double t = 0.0;
  BellOutcome outcome = BellOutcome::PhiPlus;
  bool noisy = false;  // false: ignore interaction/t and run the clean step
};

/// Runs the full protocol and records every stage: initial, dephased, step1,
/// (redephased,) step2.
StageTrace run_pipeline(const PureQubit& psi, const EnvDensity& env,
                        const DephasingInteraction& interaction1, double tau,
                        BellOutcome outcome1,
                        const std::optional<SecondStep>& second);

}  // namespace qetsim
