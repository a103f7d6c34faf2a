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

#include "qetsim/oracle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qetsim::oracle {

namespace {

using linalg::kron;

constexpr double kOracleProbabilityFloor = 1e-14;

ComplexMatrix identity(Eigen::Index d) { return ComplexMatrix::Identity(d, d); }

// Projector |ij><ij| on a two-qubit subspace.
ComplexMatrix basis_projector4(int ij) {
  ComplexMatrix p = ComplexMatrix::Zero(4, 4);
  p(ij, ij) = 1.0;
  return p;
}

std::string two_bit_label(int ij) {
  return std::string{char('0' + (ij >> 1)), char('0' + (ij & 1))};
}

// U = sum_ij |ij><ij|_pair (x) w_ij, lifted to the full A,B,C,E space.
// `pair` selects which adjacent qubit pair the pointer basis lives on.
enum class Pair { BC, AB };

ComplexMatrix dephasing_unitary(const DephasingInteraction& interaction,
                                double duration, Pair pair,
                                Eigen::Index env_dim) {
  const Eigen::Index full = 8 * env_dim;
  ComplexMatrix u = ComplexMatrix::Zero(full, full);
  for (int ij = 0; ij < 4; ++ij) {
    const std::string label = two_bit_label(ij);
    const ComplexMatrix w = interaction.covers(label)
                                ? interaction.unitary_at(label, duration)
                                : identity(env_dim);
    if (pair == Pair::BC) {
      u += kron(identity(2), kron(basis_projector4(ij), w));
    } else {
      u += kron(basis_projector4(ij), kron(identity(2), w));
    }
  }
  return u;
}

ComplexMatrix lift_bell_projector(BellOutcome outcome, Pair pair,
                                  Eigen::Index env_dim) {
  const ComplexMatrix p = bell_projector(outcome);
  if (pair == Pair::AB) {
    return kron(p, kron(identity(2), identity(env_dim)));
  }
  return kron(identity(2), kron(p, identity(env_dim)));
}

// Correction Pauli on qubit A (position 0) or C (position 2).
ComplexMatrix lift_correction(BellOutcome outcome, int position,
                              Eigen::Index env_dim) {
  const ComplexMatrix pauli = correction_pauli(outcome);
  switch (position) {
    case 0:
      return kron(pauli, kron(identity(4), identity(env_dim)));
    case 2:
      return kron(identity(4), kron(pauli, identity(env_dim)));
    default:
      throw std::logic_error("lift_correction: bad position");
  }
}

double project(ComplexMatrix& state, const ComplexMatrix& projector,
               const char* stage) {
  ComplexMatrix post = projector * state * projector;
  const double prob = post.trace().real();
  if (prob < kOracleProbabilityFloor) {
    std::ostringstream os;
    os << "full_run: outcome at " << stage << " is impossible (probability "
       << prob << ")";
    throw std::runtime_error(os.str());
  }
  state = post / prob;
  return prob;
}

}  // namespace

FullRunResult full_run(
    const PureQubit& psi, const EnvDensity& env,
    const DephasingInteraction& interaction1, double tau, BellOutcome outcome1,
    const std::optional<std::pair<DephasingInteraction, double>>&
        second_dephasing,
    BellOutcome outcome2) {
  const Eigen::Index d = env.dim();
  if (d > kMaxEnvDim) {
    throw std::invalid_argument("full_run: environment dim over the limit");
  }

  FullRunResult result;

  const Eigen::Vector4cd bell = bell_vector(BellOutcome::PhiPlus);
  ComplexMatrix state =
      kron(psi.density(), kron(bell * bell.adjoint(), env.matrix()));
  result.initial = FullState{state, d};

  const ComplexMatrix u1 = dephasing_unitary(interaction1, tau, Pair::BC, d);
  state = u1 * state * u1.adjoint();
  result.dephased = FullState{state, d};

  result.prob1 = project(state, lift_bell_projector(outcome1, Pair::AB, d),
                         "the first measurement");
  const ComplexMatrix c1 = lift_correction(outcome1, 2, d);
  state = c1 * state * c1.adjoint();
  result.post_step1 = FullState{state, d};

  if (second_dephasing) {
    const ComplexMatrix u2 = dephasing_unitary(
        second_dephasing->first, second_dephasing->second, Pair::AB, d);
    state = u2 * state * u2.adjoint();
    result.redephased = FullState{state, d};
  }

  result.prob2 = project(state, lift_bell_projector(outcome2, Pair::BC, d),
                         "the second measurement");
  ComplexMatrix c2 = lift_correction(outcome2, 0, d);
  state = c2 * state * c2.adjoint();
  if (outcome1 != BellOutcome::PhiPlus) {
    // the A,B resource pair was in |outcome1>, not |Phi+>
    const ComplexMatrix c3 = lift_correction(outcome1, 0, d);
    state = c3 * state * c3.adjoint();
  }
  result.post_step2 = FullState{state, d};

  return result;
}

ComplexMatrix random_unitary(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      a(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase freedom so the distribution is Haar-like
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Complex rii = r(i, i);
    q.col(i) *= (rii == Complex(0.0)) ? 1.0 : rii / std::abs(rii);
  }
  return q;
}

ComplexMatrix random_density(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      a(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  ComplexMatrix m = a * a.adjoint();
  return m / m.trace().real();
}

ComplexMatrix random_hermitian(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      a(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return ((a + a.adjoint()) / 2.0).eval();
}

PureQubit random_pure_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Complex a(gauss(rng), gauss(rng));
  Complex b(gauss(rng), gauss(rng));
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  return PureQubit(a / norm, b / norm);
}

DephasingInteraction random_interaction(Eigen::Index env_dim,
                                        std::mt19937_64& rng,
                                        DephasingInteraction::Form form) {
  std::map<std::string, ComplexMatrix> ops;
  for (int ij = 0; ij < 4; ++ij) {
    ops[two_bit_label(ij)] = (form == DephasingInteraction::Form::Unitary)
                                 ? random_unitary(env_dim, rng)
                                 : random_hermitian(env_dim, rng);
  }
  return DephasingInteraction(form, std::move(ops));
}

}  // namespace qetsim::oracle
