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

#include "qetsim/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qetsim/protocol.hpp"

namespace qetsim {

namespace {

constexpr double kWeightFloor = 1e-14;
constexpr double kFormTol = 1e-8;

struct DephasingBlocks {
  double p0, p1;          // diagonal-block traces
  ComplexMatrix b00, b11; // diagonal blocks as stored
  ComplexMatrix b01;      // off-diagonal block
};

// Accepts a state over a single qubit (labels {0,1}) or a dephased Bell pair
// (labels {00,11}) and returns its blocks; rejects anything that is not of
// strict pure-dephasing form. For a pure-dephasing state the off-diagonal
// block is a conditional-unitary conjugation z * W R V^dag of a PSD R, which
// is equivalent to its polar factors matching the diagonal blocks:
//   sqrt(B01 B01^dag) = sqrt(p1/p0) B00,  sqrt(B01^dag B01) = sqrt(p0/p1) B11.
DephasingBlocks dephasing_form_blocks(const BlockState& state,
                                      const char* who) {
  std::string l0, l1;
  if (state.n_qubits() == 1) {
    l0 = "0";
    l1 = "1";
  } else if (state.n_qubits() == 2) {
    l0 = "00";
    l1 = "11";
  } else {
    throw std::invalid_argument(std::string(who) +
                                ": expected a qubit or Bell-pair + "
                                "environment state");
  }
  for (const auto& label : state.labels()) {
    if (label != l0 && label != l1) {
      throw std::invalid_argument(std::string(who) + ": label '" + label +
                                  "' is outside the pure-dephasing form");
    }
  }
  if (!state.has_label(l0) || !state.has_label(l1)) {
    throw std::invalid_argument(std::string(who) +
                                ": state lacks both qubit labels");
  }

  DephasingBlocks out;
  out.b00 = state.block(l0, l0);
  out.b11 = state.block(l1, l1);
  out.b01 = state.block(l0, l1);
  out.p0 = out.b00.trace().real();
  out.p1 = out.b11.trace().real();

  if (!linalg::is_psd(out.b00, 1e-8) || !linalg::is_psd(out.b11, 1e-8)) {
    throw std::invalid_argument(std::string(who) +
                                ": a diagonal block is not PSD");
  }
  if ((state.block(l1, l0) - out.b01.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument(std::string(who) +
                                ": blocks violate Hermiticity pairing");
  }

  // structural check of the off-diagonal block (skipped in degenerate cases
  // where it must vanish anyway)
  if (out.p0 > kWeightFloor && out.p1 > kWeightFloor &&
      out.b01.cwiseAbs().maxCoeff() > kFormTol) {
    const ComplexMatrix left = linalg::sqrt_psd(out.b01 * out.b01.adjoint());
    const ComplexMatrix right = linalg::sqrt_psd(out.b01.adjoint() * out.b01);
    const double r1 = linalg::operator_norm(
        left - std::sqrt(out.p1 / out.p0) * out.b00);
    const double r2 = linalg::operator_norm(
        right - std::sqrt(out.p0 / out.p1) * out.b11);
    if (r1 > kFormTol || r2 > kFormTol) {
      throw std::invalid_argument(
          std::string(who) +
          ": off-diagonal block is not a conditional-unitary conjugation; "
          "state is not of pure-dephasing form");
    }
  }
  return out;
}

double entanglement_from_blocks(const DephasingBlocks& b, double weight) {
  if (b.p0 < kWeightFloor || b.p1 < kWeightFloor) return 0.0;
  const double fid =
      linalg::uhlmann_fidelity(b.b00 / b.p0, b.b11 / b.p1);
  const double e = weight * (1.0 - fid);
  return e < 0.0 ? 0.0 : e;  // F may exceed 1 by roundoff
}

}  // namespace

double dephasing_entanglement(const BlockState& rho_qe) {
  if (rho_qe.n_qubits() != 1) {
    throw std::invalid_argument(
        "dephasing_entanglement: expected a single-qubit + environment state");
  }
  DephasingBlocks b = dephasing_form_blocks(rho_qe, "dephasing_entanglement");
  return entanglement_from_blocks(b, 4.0 * b.p0 * b.p1);
}

double bell_pair_entanglement(const BlockState& bce) {
  if (bce.n_qubits() != 2) {
    throw std::invalid_argument(
        "bell_pair_entanglement: expected a Bell-pair + environment state");
  }
  DephasingBlocks b = dephasing_form_blocks(bce, "bell_pair_entanglement");
  if (std::abs(b.p0 - 0.5) > 1e-8 || std::abs(b.p1 - 0.5) > 1e-8) {
    throw std::invalid_argument(
        "bell_pair_entanglement: diagonal weights are not 1/2");
  }
  return entanglement_from_blocks(b, 1.0);
}

bool entanglement_ratio_check(double e_ce, double e_bce, const PureQubit& psi,
                              double tol) {
  const double weight = 4.0 * std::norm(psi.alpha) * std::norm(psi.beta);
  return std::abs(e_ce - weight * e_bce) < tol;
}

SeparabilityResult separability_check(const BlockState& rho_qe, double atol) {
  DephasingBlocks b = dephasing_form_blocks(rho_qe, "separability_check");
  if (b.p0 < kWeightFloor || b.p1 < kWeightFloor) {
    return SeparabilityResult{true, 0.0};  // product state with one branch
  }
  const double residual =
      linalg::operator_norm(b.b00 / b.p0 - b.b11 / b.p1);
  return SeparabilityResult{residual <= atol, residual};
}

CorrelationReport correlation_report(const BlockState& rho_qe, double atol) {
  DephasingBlocks b = dephasing_form_blocks(rho_qe, "correlation_report");
  SeparabilityResult sep = separability_check(rho_qe, atol);
  double fid = 1.0;
  if (b.p0 > kWeightFloor && b.p1 > kWeightFloor) {
    fid = linalg::uhlmann_fidelity(b.b00 / b.p0, b.b11 / b.p1);
    fid = std::clamp(fid, 0.0, 1.0);
  }
  CorrelationReport report;
  report.entanglement = entanglement_from_blocks(b, 4.0 * b.p0 * b.p1);
  report.separable = sep.separable;
  report.fidelity_term = fid;
  report.coherence = qubit_coherence(rho_qe);
  report.condition_residual = sep.residual;
  return report;
}

}  // namespace qetsim
