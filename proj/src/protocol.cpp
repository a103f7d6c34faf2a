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

#include "qetsim/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qetsim {

namespace {

// Bell amplitudes over pair labels {"00","01","10","11"}.
std::map<std::string, Complex> bell_amplitudes(BellOutcome outcome) {
  const Eigen::Vector4cd v = bell_vector(outcome);
  return {{"00", v(0)}, {"01", v(1)}, {"10", v(2)}, {"11", v(3)}};
}

std::string pair_bits(const std::string& label, std::size_t p1,
                      std::size_t p2) {
  return {label[p1], label[p2]};
}

std::string spectator_bits(const std::string& label, std::size_t p1,
                           std::size_t p2) {
  std::string s;
  for (std::size_t k = 0; k < label.size(); ++k) {
    if (k != p1 && k != p2) s.push_back(label[k]);
  }
  return s;
}

std::string compose_label(const std::string& pair, const std::string& spect,
                          std::size_t p1, std::size_t p2, std::size_t n) {
  std::string out(n, '0');
  out[p1] = pair[0];
  out[p2] = pair[1];
  std::size_t si = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k != p1 && k != p2) out[k] = spect[si++];
  }
  return out;
}

BlockState apply_pauli_x(const BlockState& state, std::size_t pos) {
  auto flipped = [&](const std::string& label) {
    std::string s = label;
    s[pos] = (s[pos] == '0') ? '1' : '0';
    return s;
  };
  std::vector<std::string> new_labels;
  for (const auto& label : state.labels()) new_labels.push_back(flipped(label));
  std::sort(new_labels.begin(), new_labels.end());

  auto index_of = [&](const std::string& label) {
    return std::size_t(std::lower_bound(new_labels.begin(), new_labels.end(),
                                        label) -
                       new_labels.begin());
  };
  std::vector<ComplexMatrix> blocks(new_labels.size() * new_labels.size());
  const auto& old_labels = state.labels();
  for (std::size_t i = 0; i < old_labels.size(); ++i) {
    for (std::size_t j = 0; j < old_labels.size(); ++j) {
      const std::size_t r = index_of(flipped(old_labels[i]));
      const std::size_t c = index_of(flipped(old_labels[j]));
      blocks[r * new_labels.size() + c] = state.block(i, j);
    }
  }
  return BlockState(state.register_names(), std::move(new_labels),
                    state.env_dim(), std::move(blocks));
}

BlockState apply_pauli_z(const BlockState& state, std::size_t pos) {
  const auto& labels = state.labels();
  auto sign = [&](const std::string& label) {
    return label[pos] == '1' ? -1.0 : 1.0;
  };
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(labels.size() * labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      blocks.push_back(sign(labels[i]) * sign(labels[j]) * state.block(i, j));
    }
  }
  return BlockState(state.register_names(), labels, state.env_dim(),
                    std::move(blocks));
}

void require_pair(const BlockState& state,
                  const std::pair<std::string, std::string>& pair,
                  std::size_t& p1, std::size_t& p2, const char* who) {
  p1 = state.qubit_position(pair.first);
  p2 = state.qubit_position(pair.second);
  if (p1 == p2) {
    throw std::invalid_argument(std::string(who) +
                                ": target qubits must be distinct");
  }
}

}  // namespace

BlockState dephase(const BlockState& state,
                   const DephasingInteraction& interaction,
                   std::pair<std::string, std::string> target_qubits,
                   double duration) {
  std::size_t p1, p2;
  require_pair(state, target_qubits, p1, p2, "dephase");
  if (interaction.env_dim() != state.env_dim()) {
    throw std::invalid_argument(
        "dephase: interaction environment dim does not match the state");
  }

  // conditional unitary per occurring sub-label
  std::map<std::string, ComplexMatrix> w;
  for (const auto& label : state.labels()) {
    const std::string sub = pair_bits(label, p1, p2);
    if (w.count(sub)) continue;
    if (!interaction.covers(sub)) {
      throw std::invalid_argument(
          "dephase: interaction has no conditional operator for occurring "
          "sub-label '" +
          sub + "'");
    }
    w.emplace(sub, interaction.unitary_at(sub, duration));
  }

  const auto& labels = state.labels();
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(labels.size() * labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const ComplexMatrix& wi = w.at(pair_bits(labels[i], p1, p2));
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const ComplexMatrix& wj = w.at(pair_bits(labels[j], p1, p2));
      blocks.push_back(wi * state.block(i, j) * wj.adjoint());
    }
  }
  return BlockState(state.register_names(), labels, state.env_dim(),
                    std::move(blocks));
}

Complex bell_coherence(const BlockState& state) {
  if (state.n_qubits() != 2) {
    throw std::invalid_argument(
        "bell_coherence: expected a two-qubit + environment state (trace out "
        "spectator qubits first)");
  }
  for (const auto& label : state.labels()) {
    if (label != "00" && label != "11") {
      throw std::invalid_argument(
          "bell_coherence: state is not of dephased-Bell form (label '" +
          label + "' retained)");
    }
  }
  if (!state.has_label("00") || !state.has_label("11")) {
    throw std::invalid_argument(
        "bell_coherence: state is not of dephased-Bell form (a Bell label is "
        "missing)");
  }
  const double p00 = state.block("00", "00").trace().real();
  const double p11 = state.block("11", "11").trace().real();
  if (std::abs(p00 - 0.5) > 1e-8 || std::abs(p11 - 0.5) > 1e-8) {
    throw std::invalid_argument(
        "bell_coherence: diagonal weights are not 1/2; state is not of "
        "dephased-Bell form");
  }
  return state.block("00", "11").trace() / std::sqrt(p00 * p11);
}

MeasureResult bell_measure(const BlockState& state,
                           std::pair<std::string, std::string> pair,
                           BellOutcome outcome) {
  std::size_t p1, p2;
  require_pair(state, pair, p1, p2, "bell_measure");
  const auto amps = bell_amplitudes(outcome);
  const std::size_t n = state.n_qubits();
  const Eigen::Index d = state.env_dim();

  // spectator patterns, in sorted order
  std::vector<std::string> spect;
  for (const auto& label : state.labels()) {
    spect.push_back(spectator_bits(label, p1, p2));
  }
  std::sort(spect.begin(), spect.end());
  spect.erase(std::unique(spect.begin(), spect.end()), spect.end());
  auto spect_index = [&](const std::string& s) {
    return std::size_t(std::lower_bound(spect.begin(), spect.end(), s) -
                       spect.begin());
  };

  // M[s,s'] = sum_{pb,pb'} conj(amp(pb)) amp(pb') block(L(pb,s), L(pb',s'))
  std::vector<ComplexMatrix> m(spect.size() * spect.size(),
                               ComplexMatrix::Zero(d, d));
  const auto& labels = state.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const Complex ai = amps.at(pair_bits(labels[i], p1, p2));
    if (ai == Complex(0.0)) continue;
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const Complex aj = amps.at(pair_bits(labels[j], p1, p2));
      if (aj == Complex(0.0)) continue;
      const std::size_t r = spect_index(spectator_bits(labels[i], p1, p2));
      const std::size_t c = spect_index(spectator_bits(labels[j], p1, p2));
      m[r * spect.size() + c] += std::conj(ai) * aj * state.block(i, j);
    }
  }

  double prob = 0.0;
  for (std::size_t s = 0; s < spect.size(); ++s) {
    prob += m[s * spect.size() + s].trace().real();
  }
  if (prob < kProbabilityFloor) {
    std::ostringstream os;
    os << "bell_measure: outcome " << to_string(outcome)
       << " is impossible (probability " << prob << " below "
       << kProbabilityFloor << ")";
    throw std::runtime_error(os.str());
  }

  // support of the Bell vector: the two pair-bit patterns
  std::vector<std::string> support;
  for (const auto& [pb, a] : amps) {
    if (a != Complex(0.0)) support.push_back(pb);
  }

  std::vector<std::string> new_labels;
  for (const auto& pb : support) {
    for (const auto& s : spect) {
      new_labels.push_back(compose_label(pb, s, p1, p2, n));
    }
  }
  std::sort(new_labels.begin(), new_labels.end());
  auto new_index = [&](const std::string& label) {
    return std::size_t(std::lower_bound(new_labels.begin(), new_labels.end(),
                                        label) -
                       new_labels.begin());
  };

  std::vector<ComplexMatrix> blocks(new_labels.size() * new_labels.size(),
                                    ComplexMatrix::Zero(d, d));
  for (const auto& pb : support) {
    for (const auto& pbp : support) {
      const Complex coeff = amps.at(pb) * std::conj(amps.at(pbp)) / prob;
      for (std::size_t s = 0; s < spect.size(); ++s) {
        for (std::size_t sp = 0; sp < spect.size(); ++sp) {
          const std::size_t r = new_index(compose_label(pb, spect[s], p1, p2, n));
          const std::size_t c =
              new_index(compose_label(pbp, spect[sp], p1, p2, n));
          blocks[r * new_labels.size() + c] = coeff * m[s * spect.size() + sp];
        }
      }
    }
  }
  return MeasureResult{
      prob, BlockState(state.register_names(), std::move(new_labels), d,
                       std::move(blocks))};
}

BlockState pauli_correct(const BlockState& state, BellOutcome outcome,
                         std::string_view target) {
  const std::size_t pos = state.qubit_position(target);
  switch (outcome) {
    case BellOutcome::PhiPlus:
      return state;
    case BellOutcome::PhiMinus:
      return apply_pauli_z(state, pos);
    case BellOutcome::PsiPlus:
      return apply_pauli_x(state, pos);
    case BellOutcome::PsiMinus:
      return apply_pauli_z(apply_pauli_x(state, pos), pos);
  }
  throw std::logic_error("pauli_correct: unreachable");
}

BellOutcome detect_bell_state(const BlockState& state,
                              std::pair<std::string, std::string> pair,
                              double tol) {
  const ComplexMatrix rho = state.pair_density(pair.first, pair.second);
  for (BellOutcome outcome : kAllBellOutcomes) {
    const Eigen::Vector4cd v = bell_vector(outcome);
    const double overlap = (v.adjoint() * rho * v)(0).real();
    if (overlap > 1.0 - tol) return outcome;
  }
  throw std::runtime_error("detect_bell_state: pair (" + pair.first + "," +
                           pair.second + ") is not in a definite Bell state");
}

MeasureResult step1(const PureQubit& psi, const EnvDensity& env,
                    const DephasingInteraction& interaction, double tau,
                    BellOutcome outcome) {
  BlockState sigma0 = initial_state(psi, env);
  BlockState sigma_tau = dephase(sigma0, interaction, {"B", "C"}, tau);
  MeasureResult measured = bell_measure(sigma_tau, {"A", "B"}, outcome);
  return MeasureResult{measured.probability,
                       pauli_correct(measured.state, outcome, "C")};
}

MeasureResult step2_clean(const BlockState& sigma_pm, BellOutcome outcome) {
  const BellOutcome resource = detect_bell_state(sigma_pm, {"A", "B"});
  MeasureResult measured = bell_measure(sigma_pm, {"B", "C"}, outcome);
  BlockState corrected = pauli_correct(measured.state, outcome, "A");
  if (resource != BellOutcome::PhiPlus) {
    corrected = pauli_correct(corrected, resource, "A");
  }
  return MeasureResult{measured.probability, std::move(corrected)};
}

BlockState redephase(const BlockState& sigma_pm,
                     const DephasingInteraction& interaction2, double t) {
  return dephase(sigma_pm, interaction2, {"A", "B"}, t);
}

MeasureResult step2_noisy(const BlockState& sigma_prime, BellOutcome outcome,
                          BellOutcome resource) {
  MeasureResult measured = bell_measure(sigma_prime, {"B", "C"}, outcome);
  BlockState corrected = pauli_correct(measured.state, outcome, "A");
  if (resource != BellOutcome::PhiPlus) {
    corrected = pauli_correct(corrected, resource, "A");
  }
  return MeasureResult{measured.probability, std::move(corrected)};
}

namespace {

Complex strip_coherence(const BlockState& rho_qe, Complex denom) {
  if (rho_qe.n_qubits() != 1) {
    throw std::invalid_argument(
        "qubit_coherence: expected a single-qubit + environment state");
  }
  if (!rho_qe.has_label("0") || !rho_qe.has_label("1")) {
    throw std::invalid_argument("qubit_coherence: state lacks both qubit labels");
  }
  const Complex t01 = rho_qe.block("0", "1").trace();
  if (std::abs(denom) < 1e-14) {
    if (std::abs(t01) < 1e-12) return 1.0;  // no off-diagonal to dephase
    throw std::invalid_argument(
        "qubit_coherence: off-diagonal mass with vanishing amplitude product");
  }
  return t01 / denom;
}

}  // namespace

Complex qubit_coherence(const BlockState& rho_qe) {
  if (rho_qe.n_qubits() != 1) {
    throw std::invalid_argument(
        "qubit_coherence: expected a single-qubit + environment state");
  }
  if (!rho_qe.has_label("0") || !rho_qe.has_label("1")) {
    throw std::invalid_argument("qubit_coherence: state lacks both qubit labels");
  }
  const double p0 = rho_qe.block("0", "0").trace().real();
  const double p1 = rho_qe.block("1", "1").trace().real();
  return strip_coherence(rho_qe, std::sqrt(std::max(p0, 0.0) * std::max(p1, 0.0)));
}

Complex qubit_coherence(const BlockState& rho_qe, const PureQubit& psi) {
  return strip_coherence(rho_qe, psi.alpha * std::conj(psi.beta));
}

StageTrace run_pipeline(const PureQubit& psi, const EnvDensity& env,
                        const DephasingInteraction& interaction1, double tau,
                        BellOutcome outcome1,
                        const std::optional<SecondStep>& second) {
  StageTrace trace;
  BlockState sigma0 = initial_state(psi, env);
  trace.push_back({"initial", sigma0, std::nullopt, 1.0});

  BlockState sigma_tau = dephase(sigma0, interaction1, {"B", "C"}, tau);
  trace.push_back({"dephased", sigma_tau, std::nullopt, 1.0});

  MeasureResult m1 = bell_measure(sigma_tau, {"A", "B"}, outcome1);
  BlockState sigma_pm = pauli_correct(m1.state, outcome1, "C");
  trace.push_back({"step1", sigma_pm, outcome1, m1.probability});

  if (!second) return trace;

  if (second->noisy) {
    BlockState sigma_prime = redephase(sigma_pm, second->interaction, second->t);
    trace.push_back({"redephased", sigma_prime, std::nullopt, 1.0});
    MeasureResult m2 = step2_noisy(sigma_prime, second->outcome, outcome1);
    trace.push_back({"step2", m2.state, second->outcome, m2.probability});
  } else {
    MeasureResult m2 = step2_clean(sigma_pm, second->outcome);
    trace.push_back({"step2", m2.state, second->outcome, m2.probability});
  }
  return trace;
}

}  // namespace qetsim
