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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qetsim/linalg.hpp"

namespace qetsim {

/// Environments larger than this make no sense at desk scale (the full
/// register space is 8 * env_dim <= 128).
inline constexpr Eigen::Index kMaxEnvDim = 16;

/// Normalized single-qubit state alpha|0> + beta|1>.
struct PureQubit {
  Complex alpha;
  Complex beta;

  PureQubit(Complex a, Complex b);

  Eigen::Vector2cd amplitudes() const { return {alpha, beta}; }
  ComplexMatrix density() const;
};

/// Density operator of the environment.
class EnvDensity {
 public:
  explicit EnvDensity(ComplexMatrix matrix);

  Eigen::Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

// ---------------------------------------------------------------------------
// Bell basis

enum class BellOutcome { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellOutcome, 4> kAllBellOutcomes = {
    BellOutcome::PhiPlus, BellOutcome::PhiMinus, BellOutcome::PsiPlus,
    BellOutcome::PsiMinus};

/// Amplitudes over the two-qubit basis {00, 01, 10, 11}.
Eigen::Vector4cd bell_vector(BellOutcome outcome);
ComplexMatrix bell_projector(BellOutcome outcome);

/// The teleportation correction on the receiving qubit: I, Z, X, Z*X for
/// Phi+, Phi-, Psi+, Psi-. Fixed by requiring that environment-free
/// teleportation returns the input state for every outcome.
Eigen::Matrix2cd correction_pauli(BellOutcome outcome);

std::string_view to_string(BellOutcome outcome);
BellOutcome parse_bell_outcome(std::string_view name);

// ---------------------------------------------------------------------------
// Dephasing interactions

/// Conditional environment operators indexed by system pointer-basis labels.
///
/// An interaction is stored either as Hermitian generators V (the conditional
/// unitary over a duration t is exp(-i V t / hbar), hbar = 1) or directly as
/// unitaries w. A unitary-form operator is a fixed snapshot: duration 0 means
/// "no evolution" and any other duration applies the stored unitary once.
class DephasingInteraction {
 public:
  enum class Form { Generator, Unitary };

  DephasingInteraction(Form form, std::map<std::string, ComplexMatrix> ops);

  /// All conditional operators equal to the identity.
  static DephasingInteraction identity(Eigen::Index env_dim);

  Form form() const { return form_; }
  Eigen::Index env_dim() const { return env_dim_; }
  bool covers(std::string_view label) const;
  const std::map<std::string, ComplexMatrix>& ops() const { return ops_; }

  /// Conditional unitary for `label` over `duration`.
  ComplexMatrix unitary_at(std::string_view label, double duration) const;

 private:
  Form form_;
  std::map<std::string, ComplexMatrix> ops_;
  Eigen::Index env_dim_;
};

// ---------------------------------------------------------------------------
// Block density matrices

/// System (x) environment state stored as a grid of environment-operator
/// blocks indexed by retained system basis labels.
///
/// Labels are bit-strings over the named qubit register (first name is the
/// most significant bit of the assembled matrix index). Labels that never
/// acquire support are simply not stored.
class BlockState {
 public:
  BlockState(std::vector<std::string> register_names,
             std::vector<std::string> labels, Eigen::Index env_dim,
             std::vector<ComplexMatrix> blocks);

  /// Rebuilds the block form of a density matrix. Labels whose diagonal
  /// block is negligible (below `label_cutoff_tol` in max-abs) are dropped;
  /// if any off-grid block then carries non-negligible mass, the input was
  /// not a valid block-sparse density matrix and the offending label pairs
  /// are reported.
  static BlockState from_full(const ComplexMatrix& m,
                              std::vector<std::string> register_names,
                              Eigen::Index env_dim,
                              double label_cutoff_tol = 1e-12);

  ComplexMatrix to_full() const;

  const std::vector<std::string>& register_names() const {
    return register_names_;
  }
  const std::vector<std::string>& labels() const { return labels_; }
  Eigen::Index env_dim() const { return env_dim_; }
  std::size_t n_qubits() const { return register_names_.size(); }

  bool has_label(std::string_view label) const;
  std::size_t label_index(std::string_view label) const;
  std::size_t qubit_position(std::string_view name) const;

  const ComplexMatrix& block(std::size_t i, std::size_t j) const;
  const ComplexMatrix& block(std::string_view row_label,
                             std::string_view col_label) const;

  double trace() const;
  double purity() const;  // Tr(rho^2) of the assembled state
  bool is_normalized(double tol = 1e-10) const;

  BlockState scaled(double factor) const;

  /// Traces out one named system qubit; the environment is always kept.
  BlockState trace_out(std::string_view qubit) const;

  /// Reduced density matrix of the system register (environment traced out),
  /// dim 2^n including zero rows/columns for omitted labels.
  ComplexMatrix system_density() const;

  /// Reduced 4x4 density matrix of a named qubit pair.
  ComplexMatrix pair_density(std::string_view q1, std::string_view q2) const;

  /// Throws naming the violated invariant: block Hermiticity pairing, PSD
  /// diagonal blocks, PSD assembled state, and (optionally) unit trace.
  void validate(double tol = 1e-9, bool expect_normalized = true) const;

 private:
  std::vector<std::string> register_names_;
  std::vector<std::string> labels_;
  Eigen::Index env_dim_;
  std::vector<ComplexMatrix> blocks_;  // row-major labels x labels
};

/// |psi><psi|_A (x) |Phi+><Phi+|_BC (x) R(0) over register (A, B, C) in block
/// form; retained labels are {000, 011, 100, 111}.
BlockState initial_state(const PureQubit& psi, const EnvDensity& env);

}  // namespace qetsim
