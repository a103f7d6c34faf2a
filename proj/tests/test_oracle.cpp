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

#include "qetsim/oracle.hpp"
#include "qetsim/verify.hpp"

using namespace qetsim;

namespace {

std::mt19937_64 rng(31337);

}  // namespace

TEST_CASE("random generators have the advertised structure") {
  for (Eigen::Index d : {2, 3, 5}) {
    CHECK(linalg::is_unitary(oracle::random_unitary(d, rng), 1e-12));
    CHECK(linalg::is_density(oracle::random_density(d, rng), 1e-10));
    CHECK(linalg::is_hermitian(oracle::random_hermitian(d, rng), 1e-14));
  }
  PureQubit psi = oracle::random_pure_qubit(rng);
  CHECK(std::abs(std::norm(psi.alpha) + std::norm(psi.beta) - 1.0) < 1e-12);
}

TEST_CASE("identity interactions teleport exactly") {
  PureQubit psi = oracle::random_pure_qubit(rng);
  EnvDensity env(oracle::random_density(3, rng));
  DephasingInteraction trivial = DephasingInteraction::identity(3);
  for (BellOutcome oc1 : kAllBellOutcomes) {
    for (BellOutcome oc2 : kAllBellOutcomes) {
      auto result =
          oracle::full_run(psi, env, trivial, 1.0, oc1, std::nullopt, oc2);
      CHECK(result.prob1 == doctest::Approx(0.25).epsilon(1e-12));
      CHECK(result.prob2 == doctest::Approx(0.25).epsilon(1e-12));
      // the final A state is |psi><psi| and the environment untouched
      ComplexMatrix a_state = linalg::partial_trace(
          result.post_step2.matrix, {2, 2, 2, 3}, {0});
      CHECK(linalg::trace_distance(a_state, psi.density()) < 1e-13);
      ComplexMatrix e_state = linalg::partial_trace(
          result.post_step2.matrix, {2, 2, 2, 3}, {3});
      CHECK(linalg::trace_distance(e_state, env.matrix()) < 1e-13);
    }
  }
}

TEST_CASE("outcome probabilities are complete at every measurement") {
  PureQubit psi = oracle::random_pure_qubit(rng);
  EnvDensity env(oracle::random_density(2, rng));
  auto interaction =
      oracle::random_interaction(2, rng, DephasingInteraction::Form::Unitary);
  auto interaction2 =
      oracle::random_interaction(2, rng, DephasingInteraction::Form::Unitary);
  double total1 = 0.0, total2 = 0.0;
  for (BellOutcome oc : kAllBellOutcomes) {
    auto result = oracle::full_run(psi, env, interaction, 1.0, oc,
                                   std::make_pair(interaction2, 1.0),
                                   BellOutcome::PhiPlus);
    total1 += result.prob1;
    auto result2 = oracle::full_run(psi, env, interaction, 1.0,
                                    BellOutcome::PhiPlus,
                                    std::make_pair(interaction2, 1.0), oc);
    total2 += result2.prob2;
  }
  CHECK(total1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(total2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pre-measurement evolution preserves trace and purity spectrum") {
  PureQubit psi = oracle::random_pure_qubit(rng);
  EnvDensity env(oracle::random_density(3, rng));
  auto interaction =
      oracle::random_interaction(3, rng, DephasingInteraction::Form::Generator);
  auto result = oracle::full_run(psi, env, interaction, 0.7,
                                 BellOutcome::PhiPlus, std::nullopt,
                                 BellOutcome::PhiPlus);
  CHECK(result.initial.matrix.trace().real() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(result.dephased.matrix.trace().real() ==
        doctest::Approx(1.0).epsilon(1e-12));
  const double purity0 = (result.initial.matrix * result.initial.matrix)
                             .trace()
                             .real();
  const double purity1 = (result.dephased.matrix * result.dephased.matrix)
                             .trace()
                             .real();
  CHECK(std::abs(purity0 - purity1) < 1e-12);
}

TEST_CASE("the oracle rejects oversized environments") {
  // EnvDensity already enforces the bound; the oracle guards its own door too
  CHECK_THROWS_AS(EnvDensity(ComplexMatrix::Identity(32, 32) / 32.0),
                  std::invalid_argument);
}

TEST_CASE("block engine and dense oracle agree on randomized instances") {
  std::mt19937_64 local(2024);
  verify::Options opts;
  opts.seed = 8675309;
  opts.instances = 12;
  verify::SuiteResult result = verify::suite_oracle_equivalence(opts);
  CHECK(result.passed);
  CHECK(result.max_residual < 1e-10);
}
