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
#include <random>
#include <utility>
#include <vector>

#include "qetsim/model.hpp"

namespace qetsim::oracle {

/// Dense state over the full 8 * env_dim Hilbert space (register A, B, C and
/// the environment last).
struct FullState {
  ComplexMatrix matrix;
  Eigen::Index env_dim;
};

struct FullRunResult {
  FullState initial;
  FullState dephased;
  FullState post_step1;                 // measured (A,B), corrected C
  std::optional<FullState> redephased;  // present when a second dephasing ran
  FullState post_step2;                 // measured (B,C), corrected A
  double prob1 = 0.0;
  double prob2 = 0.0;
};

/// Brute-force run of the whole protocol on dense matrices: conditional
/// evolution operators assembled as full unitaries, projective Bell
/// measurements, Pauli corrections. Shares nothing with the block engine
/// beyond the linear-algebra kernel.
///
/// When `second_dephasing` is absent the second teleportation is the clean
/// one; otherwise the pair (interaction, t) dephases A,B first.
FullRunResult full_run(
    const PureQubit& psi, const EnvDensity& env,
    const DephasingInteraction& interaction1, double tau, BellOutcome outcome1,
    const std::optional<std::pair<DephasingInteraction, double>>&
        second_dephasing,
    BellOutcome outcome2);

// Randomized-instance generation (QR of complex Gaussians for unitaries,
// normalized A A^dag for densities); seeds are the caller's responsibility.
ComplexMatrix random_unitary(Eigen::Index dim, std::mt19937_64& rng);
ComplexMatrix random_density(Eigen::Index dim, std::mt19937_64& rng);
ComplexMatrix random_hermitian(Eigen::Index dim, std::mt19937_64& rng);
PureQubit random_pure_qubit(std::mt19937_64& rng);
DephasingInteraction random_interaction(Eigen::Index env_dim,
                                        std::mt19937_64& rng,
                                        DephasingInteraction::Form form);

}  // namespace qetsim::oracle
