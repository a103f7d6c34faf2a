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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qetsim/model.hpp"
#include "qetsim/oracle.hpp"

using namespace qetsim;
using linalg::kron;

namespace {

std::mt19937_64 rng(777);

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

TEST_CASE("PureQubit enforces normalization") {
  CHECK_NOTHROW(PureQubit(kInvSqrt2, Complex(0, kInvSqrt2)));
  CHECK_THROWS_AS(PureQubit(1.0, 0.1), std::invalid_argument);
  PureQubit psi(0.6, Complex(0, 0.8));
  CHECK((psi.density() - psi.amplitudes() * psi.amplitudes().adjoint())
            .norm() == 0.0);
}

TEST_CASE("EnvDensity validates its invariants") {
  CHECK_NOTHROW(EnvDensity(oracle::random_density(4, rng)));
  CHECK_THROWS_AS(EnvDensity(2.0 * oracle::random_density(3, rng)),
                  std::invalid_argument);  // trace 2
  ComplexMatrix not_psd = ComplexMatrix::Zero(2, 2);
  not_psd(0, 0) = 1.5;
  not_psd(1, 1) = -0.5;
  CHECK_THROWS_AS(EnvDensity{not_psd}, std::invalid_argument);
  ComplexMatrix not_herm = oracle::random_density(2, rng);
  not_herm(0, 1) += Complex(0.3, 0.1);
  CHECK_THROWS_AS(EnvDensity{not_herm}, std::invalid_argument);
  CHECK_THROWS_AS(EnvDensity(ComplexMatrix::Identity(17, 17) / 17.0),
                  std::invalid_argument);  // over the dim bound
}

TEST_CASE("Bell vectors are orthonormal and complete") {
  ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
  for (BellOutcome a : kAllBellOutcomes) {
    sum += bell_projector(a);
    for (BellOutcome b : kAllBellOutcomes) {
      const Complex overlap = bell_vector(a).adjoint() * bell_vector(b);
      CHECK(std::abs(overlap - (a == b ? 1.0 : 0.0)) < 1e-14);
    }
  }
  CHECK((sum - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(parse_bell_outcome("Phi+") == BellOutcome::PhiPlus);
  CHECK(parse_bell_outcome("psi_minus") == BellOutcome::PsiMinus);
  CHECK_THROWS_AS(parse_bell_outcome("omega"), std::invalid_argument);
  for (BellOutcome a : kAllBellOutcomes) {
    CHECK(parse_bell_outcome(to_string(a)) == a);
    CHECK(linalg::is_unitary(correction_pauli(a), 1e-15));
  }
}

TEST_CASE("DephasingInteraction validates per form") {
  std::map<std::string, ComplexMatrix> gen_ops = {
      {"00", oracle::random_hermitian(3, rng)},
      {"11", oracle::random_hermitian(3, rng)}};
  CHECK_NOTHROW(DephasingInteraction(DephasingInteraction::Form::Generator,
                                     gen_ops));
  std::map<std::string, ComplexMatrix> bad_gen = gen_ops;
  bad_gen["00"](0, 1) += Complex(0, 0.5);
  CHECK_THROWS_AS(DephasingInteraction(DephasingInteraction::Form::Generator,
                                       bad_gen),
                  std::invalid_argument);

  std::map<std::string, ComplexMatrix> uni_ops = {
      {"00", oracle::random_unitary(3, rng)},
      {"11", oracle::random_unitary(3, rng)}};
  DephasingInteraction uni(DephasingInteraction::Form::Unitary, uni_ops);
  CHECK_THROWS_AS(DephasingInteraction(DephasingInteraction::Form::Unitary,
                                       gen_ops),
                  std::invalid_argument);

  CHECK(uni.covers("00"));
  CHECK_FALSE(uni.covers("01"));
  CHECK_THROWS_AS(uni.unitary_at("01", 1.0), std::invalid_argument);

  // unitary form: duration 0 means no evolution
  CHECK((uni.unitary_at("00", 0.0) - ComplexMatrix::Identity(3, 3)).norm() ==
        0.0);
  CHECK((uni.unitary_at("00", 1.0) - uni_ops.at("00")).norm() == 0.0);

  // generator form follows the exponential over the duration
  DephasingInteraction gen(DephasingInteraction::Form::Generator, gen_ops);
  CHECK((gen.unitary_at("00", 0.7) -
         linalg::expm_unitary(gen_ops.at("00"), 0.7))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("initial_state for a fully pure case is the expected vector state") {
  PureQubit psi(1.0, 0.0);
  ComplexMatrix e0 = ComplexMatrix::Zero(2, 2);
  e0(0, 0) = 1.0;
  BlockState s = initial_state(psi, EnvDensity(e0));
  CHECK(s.labels() == std::vector<std::string>{"000", "011", "100", "111"});

  // (|000> + |011>)/sqrt(2) (x) |0>_E
  Eigen::VectorXcd vec = Eigen::VectorXcd::Zero(16);
  vec(0) = kInvSqrt2;                 // |000>|0>
  vec(2 * 3) = kInvSqrt2;            // |011>|0>
  CHECK((s.to_full() - vec * vec.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(s.purity() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("initial_state assembles to the triple Kronecker product") {
  PureQubit psi = oracle::random_pure_qubit(rng);
  ComplexMatrix r0 = oracle::random_density(3, rng);
  BlockState s = initial_state(psi, EnvDensity(r0));

  const Eigen::Vector4cd bell = bell_vector(BellOutcome::PhiPlus);
  ComplexMatrix expected =
      kron(psi.density(), kron(bell * bell.adjoint(), r0));
  CHECK((s.to_full() - expected).cwiseAbs().maxCoeff() < 1e-14);

  // tracing the environment recovers the product of system factors
  ComplexMatrix sys = linalg::partial_trace(s.to_full(), {8, 3}, {0});
  ComplexMatrix sys_expected = kron(psi.density(), bell * bell.adjoint());
  CHECK((sys - sys_expected).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((s.system_density() - sys_expected).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("to_full / from_full round trip") {
  PureQubit psi = oracle::random_pure_qubit(rng);
  BlockState s = initial_state(psi, EnvDensity(oracle::random_density(2, rng)));
  BlockState back = BlockState::from_full(s.to_full(), {"A", "B", "C"}, 2);
  CHECK(back.labels() == s.labels());
  CHECK(back.register_names() == s.register_names());
  CHECK((back.to_full() - s.to_full()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("from_full reports mass outside the retained labels") {
  BlockState s = initial_state(PureQubit(0.6, 0.8),
                               EnvDensity(oracle::random_density(2, rng)));
  ComplexMatrix full = s.to_full();
  // plant Hermitian off-diagonal mass between two unpopulated labels
  const Eigen::Index r = 1 * 2;  // label 001
  const Eigen::Index c = 5 * 2;  // label 101
  full(r, c) += 0.25;
  full(c, r) += 0.25;
  CHECK_THROWS_WITH_AS(BlockState::from_full(full, {"A", "B", "C"}, 2),
                       doctest::Contains("001<->101"), std::invalid_argument);
}

TEST_CASE("BlockState accessors and reductions") {
  PureQubit psi = oracle::random_pure_qubit(rng);
  ComplexMatrix r0 = oracle::random_density(3, rng);
  BlockState s = initial_state(psi, EnvDensity(r0));

  CHECK(s.n_qubits() == 3);
  CHECK(s.env_dim() == 3);
  CHECK(s.qubit_position("B") == 1);
  CHECK_THROWS_AS(s.qubit_position("Q"), std::invalid_argument);
  CHECK(s.trace() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.has_label("011"));
  CHECK_FALSE(s.has_label("010"));
  CHECK_THROWS_AS(s.block("010", "000"), std::invalid_argument);

  // qubit A is uncorrelated: tracing it out leaves the Bell pair + env
  BlockState bc = s.trace_out("A");
  CHECK(bc.register_names() == std::vector<std::string>{"B", "C"});
  CHECK(bc.labels() == std::vector<std::string>{"00", "11"});
  const Eigen::Vector4cd bell = bell_vector(BellOutcome::PhiPlus);
  CHECK((bc.to_full() - kron(bell * bell.adjoint(), r0)).cwiseAbs().maxCoeff() <
        1e-13);

  // pair density of B,C is the Bell projector
  CHECK((s.pair_density("B", "C") - bell * bell.adjoint())
            .cwiseAbs()
            .maxCoeff() < 1e-13);
}

TEST_CASE("validate names the violated invariant") {
  BlockState s = initial_state(PureQubit(0.6, 0.8),
                               EnvDensity(oracle::random_density(2, rng)));
  CHECK_NOTHROW(s.validate());

  BlockState half = s.scaled(0.5);
  CHECK_THROWS_WITH_AS(half.validate(), doctest::Contains("trace"),
                       std::runtime_error);
  CHECK_NOTHROW(half.validate(1e-9, /*expect_normalized=*/false));

  // breaking the Hermiticity pairing of an off-diagonal block
  std::vector<ComplexMatrix> blocks;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) blocks.push_back(s.block(i, j));
  blocks[1](0, 0) += Complex(0.0, 0.2);
  BlockState broken({"A", "B", "C"}, s.labels(), 2, blocks);
  CHECK_THROWS_WITH_AS(broken.validate(), doctest::Contains("pairing"),
                       std::runtime_error);
}

TEST_CASE("BlockState rejects malformed construction") {
  std::vector<ComplexMatrix> one{ComplexMatrix::Identity(2, 2)};
  CHECK_THROWS_AS(BlockState({"A", "A"}, {"00"}, 2, one),
                  std::invalid_argument);
  CHECK_THROWS_AS(BlockState({"A", "B"}, {"0"}, 2, one),
                  std::invalid_argument);
  CHECK_THROWS_AS(BlockState({"A"}, {"0", "1"}, 2, one),
                  std::invalid_argument);
}
