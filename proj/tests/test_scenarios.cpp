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
#include <numbers>

#include "qetsim/entanglement.hpp"
#include "qetsim/protocol.hpp"
#include "qetsim/scenarios.hpp"

using namespace qetsim;
using namespace qetsim::scenarios;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

TEST_CASE("config validation") {
  ScenarioConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.x = 0.9;  // |x|^2 + |y|^2 != 1
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = ScenarioConfig{};
  cfg.c0 = 1.2;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("build_interactions produces unitary conditional operators") {
  ScenarioConfig cfg;
  cfg.c0 = 0.7;
  cfg.phia = 0.4;
  cfg.phib = -1.1;
  Interactions inter = build_interactions(cfg);
  for (const char* label : {"00", "01", "10", "11"}) {
    for (double t : {0.0, 0.5, 2.0}) {
      CHECK(linalg::is_unitary(inter.first.unitary_at(label, t), 1e-12));
      CHECK(linalg::is_unitary(inter.second.unitary_at(label, t), 1e-12));
    }
  }
  // w00 of the first interaction carries the configured phases
  ComplexMatrix w = inter.first.unitary_at("00", cfg.tau);
  CHECK(std::abs(w(0, 0) - std::exp(Complex(0, cfg.phi0 * cfg.tau))) < 1e-13);
  CHECK(std::abs(w(1, 1) - std::exp(Complex(0, cfg.phi1 * cfg.tau))) < 1e-13);
  // all other conditional operators are trivial
  CHECK((inter.first.unitary_at("11", 1.3) - ComplexMatrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("second conditional operator is diagonalized by |a>, |b>") {
  ScenarioConfig cfg;
  cfg.phia = 0.8;
  cfg.phib = -0.3;
  Interactions inter = build_interactions(cfg);
  Eigen::Vector2cd a, b;
  a << cfg.x, cfg.y;
  b << std::conj(cfg.y), -std::conj(cfg.x);
  const double t = 1.7;
  ComplexMatrix w = inter.second.unitary_at("00", t);
  CHECK((w * a - std::exp(Complex(0, cfg.phia * t)) * a).cwiseAbs().maxCoeff() <
        1e-13);
  CHECK((w * b - std::exp(Complex(0, cfg.phib * t)) * b).cwiseAbs().maxCoeff() <
        1e-13);

  // x = 1 keeps it diagonal, commuting with the environment state
  ScenarioConfig diag_cfg;
  diag_cfg.x = 1.0;
  diag_cfg.y = 0.0;
  Interactions diag_inter = build_interactions(diag_cfg);
  ComplexMatrix wd = diag_inter.second.unitary_at("00", 0.9);
  CHECK(std::abs(wd(0, 1)) < 1e-14);
  CHECK(std::abs(wd(1, 0)) < 1e-14);
  ComplexMatrix r0 = diag_cfg.environment().matrix();
  CHECK((wd * r0 - r0 * wd).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("trivial phases leave the Bell state coherent") {
  ScenarioConfig cfg;
  cfg.phi0 = 0.0;
  cfg.phi1 = 0.0;
  Interactions inter = build_interactions(cfg);
  BlockState dephased =
      dephase(initial_state(cfg.psi, cfg.environment()), inter.first,
              {"B", "C"}, cfg.tau);
  CHECK(std::abs(bell_coherence(dephased.trace_out("A")) - 1.0) < 1e-13);
  CHECK(std::abs(closed_form_coherence(cfg, 0.0, Branch::Phi) - 1.0) < 1e-13);
}

TEST_CASE("closed-form coherence limits") {
  ScenarioConfig cfg;  // c0 = 1/2, phi0 = 0, phi1 tau = pi/2, phia = 0
  // t = 0: both branches give c0 e^{i phi0 tau} + c1 e^{i phi1 tau}
  const Complex expected =
      0.5 + 0.5 * std::exp(Complex(0, cfg.phi1 * cfg.tau));
  for (Branch branch : {Branch::Phi, Branch::Psi}) {
    const Complex c = closed_form_coherence(cfg, 0.0, branch);
    CHECK(std::abs(c - expected) < 1e-14);
    CHECK(std::abs(c - Complex(0.5, 0.5)) < 1e-14);
    CHECK(std::abs(std::abs(c) - kInvSqrt2) < 1e-14);
  }
  // |x|^2 = 0.5: the branch magnitudes coincide for every t
  for (double t = 0.0; t < 6.3; t += 0.37) {
    CHECK(std::abs(std::abs(closed_form_coherence(cfg, t, Branch::Phi)) -
                   std::abs(closed_form_coherence(cfg, t, Branch::Psi))) <
          1e-13);
    CHECK(std::abs(closed_form_coherence(cfg, t, Branch::Phi)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("a second operator diagonal in the environment basis keeps both "
          "branches separable in the equal-interaction scenario") {
  // x = 0 or y = 0 makes w'00 commute with R(0); with equal interactions the
  // rotated-vs-unrotated conditional states then coincide on both branches.
  ScenarioConfig cfg;
  cfg.c0 = 0.7;
  cfg.x = 1.0;
  cfg.y = 0.0;
  cfg.phia = 0.5;
  cfg.phib = -0.5;
  Interactions inter = build_interactions(cfg);
  for (double t : {0.3, 1.1, 2.9}) {
    MeasureResult s1 = step1(cfg.psi, cfg.environment(), inter.second, t,
                             BellOutcome::PhiPlus);
    BlockState sigma_prime = redephase(s1.state, inter.second, t);
    for (BellOutcome oc : {BellOutcome::PhiPlus, BellOutcome::PsiPlus}) {
      BlockState ae = step2_noisy(sigma_prime, oc)
                          .state.trace_out("B")
                          .trace_out("C");
      CHECK(dephasing_entanglement(ae) < 1e-12);
      CHECK(separability_check(ae).separable);
    }
  }
  // while the coherence factors of the two branches still differ in phase
  const Complex c_phi = closed_form_coherence(cfg, 1.1, Branch::Phi);
  const Complex c_psi = closed_form_coherence(cfg, 1.1, Branch::Psi);
  CHECK(std::abs(c_phi - c_psi) > 1e-3);
}

TEST_CASE("fig1 table matches the protocol engine and its stated anchors") {
  ScenarioConfig base;
  Fig1Result result = fig1_table(base);
  CHECK(result.rows.size() == 3 * 201);
  CHECK(result.max_closed_form_residual < 1e-10);

  for (const auto& row : result.rows) {
    if (row.x2 == 0.5) {
      CHECK(std::abs(row.abs_c_phi - row.abs_c_psi) < 1e-12);
    }
    if (row.phib_t == 0.0) {
      CHECK(std::abs(row.abs_c_phi - kInvSqrt2) < 1e-12);
      CHECK(std::abs(row.abs_c_psi - kInvSqrt2) < 1e-12);
    }
  }
  // the swept phase covers one full period
  CHECK(result.rows.front().phib_t == 0.0);
  CHECK(std::abs(result.rows.back().phib_t - 2.0 * std::numbers::pi) < 1e-12);
}

TEST_CASE("fig1 branches genuinely split away from x2 = 0.5") {
  ScenarioConfig base;
  Fig1Result result = fig1_table(base, {0.1});
  double max_gap = 0.0;
  for (const auto& row : result.rows) {
    max_gap = std::max(max_gap, std::abs(row.abs_c_phi - row.abs_c_psi));
  }
  CHECK(max_gap > 0.1);
}

TEST_CASE("fig2 table: Psi branch separable, Phi branch analytic") {
  ScenarioConfig base;
  base.phia = 0.5;
  base.phib = -0.5;
  Fig2Result result = fig2_table(base);
  CHECK(result.rows.size() == 5 * 201);
  CHECK(result.max_closed_form_residual < 1e-10);

  for (const auto& row : result.rows) {
    CHECK(row.e_psi < 1e-12);
    CHECK(row.e_diff == row.e_phi - row.e_psi);
    // derived oracle: E_phi = (2 c0 - 1)^2 sin^2((phia - phib) t)
    const double expected = (2.0 * row.c0 - 1.0) * (2.0 * row.c0 - 1.0) *
                            std::sin(row.phase_t) * std::sin(row.phase_t);
    CHECK(std::abs(row.e_phi - expected) < 1e-10);
  }
}

TEST_CASE("fig2 curves order monotonically in c0") {
  ScenarioConfig base;
  base.phia = 0.5;
  base.phib = -0.5;
  const std::vector<double> c0s = {0.6, 0.7, 0.8, 0.9, 1.0};
  Fig2Result result = fig2_table(base, c0s);
  const std::size_t per_curve = result.rows.size() / c0s.size();
  for (std::size_t k = 0; k + 1 < c0s.size(); ++k) {
    for (std::size_t i = 0; i < per_curve; ++i) {
      const auto& low = result.rows[k * per_curve + i];
      const auto& high = result.rows[(k + 1) * per_curve + i];
      CHECK(high.e_phi >= low.e_phi - 1e-12);
      const double s2 = std::sin(low.phase_t) * std::sin(low.phase_t);
      if (s2 > 1e-6) CHECK(high.e_phi > low.e_phi);
    }
  }
}
