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

#include "qetsim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qetsim/entanglement.hpp"
#include "qetsim/oracle.hpp"
#include "qetsim/protocol.hpp"
#include "qetsim/scenarios.hpp"

namespace qetsim::verify {

namespace {

double tolerance_for(const Options& opts, const std::string& name,
                     double fallback) {
  auto it = opts.tol_overrides.find(name);
  return it == opts.tol_overrides.end() ? fallback : it->second;
}

Eigen::Index env_dim_for(const Options& opts, int index) {
  return opts.env_dims.at(std::size_t(index) % opts.env_dims.size());
}

BlockState ce_state(const BlockState& sigma_pm) {
  return sigma_pm.trace_out("A").trace_out("B");
}

BlockState ae_state(const BlockState& sigma_pm2) {
  return sigma_pm2.trace_out("B").trace_out("C");
}

double td(const BlockState& a, const BlockState& b) {
  return linalg::trace_distance(a.to_full(), b.to_full());
}

// ij -> (1-i)(1-j) relabeling of the conditional operators
DephasingInteraction swap_pointer_labels(const DephasingInteraction& in) {
  std::map<std::string, ComplexMatrix> ops;
  for (const auto& [label, op] : in.ops()) {
    std::string swapped = label;
    for (char& c : swapped) c = (c == '0') ? '1' : '0';
    ops[swapped] = op;
  }
  return DephasingInteraction(in.form(), std::move(ops));
}

SuiteResult make_result(std::string name, double max_residual, double tol,
                        std::string detail = {}) {
  return SuiteResult{std::move(name), max_residual <= tol, max_residual, tol,
                     std::move(detail)};
}

}  // namespace

Instance random_instance(std::mt19937_64& rng, Eigen::Index env_dim) {
  const auto form = (rng() % 2 == 0) ? DephasingInteraction::Form::Unitary
                                     : DephasingInteraction::Form::Generator;
  const bool generator = form == DephasingInteraction::Form::Generator;
  return Instance{
      oracle::random_pure_qubit(rng),
      EnvDensity(oracle::random_density(env_dim, rng)),
      oracle::random_interaction(env_dim, rng, form),
      oracle::random_interaction(env_dim, rng, form),
      generator ? 0.9 : 1.0,
      generator ? 1.3 : 1.0,
  };
}

Instance separable_instance(std::mt19937_64& rng, Eigen::Index env_dim) {
  ComplexMatrix r0 = oracle::random_density(env_dim, rng);
  auto eig = linalg::herm_eig(r0);

  // unitary commuting with r0: diagonal phases in the eigenbasis of r0
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979324);
  Eigen::VectorXcd phases(env_dim);
  for (Eigen::Index i = 0; i < env_dim; ++i) {
    phases(i) = std::exp(Complex(0.0, angle(rng)));
  }
  ComplexMatrix commuting =
      eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();

  ComplexMatrix w00 = oracle::random_unitary(env_dim, rng);
  std::map<std::string, ComplexMatrix> ops;
  ops["00"] = w00;
  ops["11"] = w00 * commuting;
  ops["01"] = oracle::random_unitary(env_dim, rng);
  ops["10"] = oracle::random_unitary(env_dim, rng);

  return Instance{
      oracle::random_pure_qubit(rng),
      EnvDensity(r0),
      DephasingInteraction(DephasingInteraction::Form::Unitary, std::move(ops)),
      oracle::random_interaction(env_dim, rng,
                                 DephasingInteraction::Form::Unitary),
      1.0,
      1.0,
  };
}

SuiteResult suite_round_trip(const Options& opts) {
  const double tol = tolerance_for(opts, "roundtrip", 1e-12);
  std::mt19937_64 rng(opts.seed);
  double worst = 0.0;
  for (int i = 0; i < opts.instances; ++i) {
    Instance inst = random_instance(rng, env_dim_for(opts, i));
    for (BellOutcome oc1 : kAllBellOutcomes) {
      MeasureResult s1 =
          step1(inst.psi, inst.env, inst.interaction1, inst.tau, oc1);
      const BlockState ce = ce_state(s1.state);
      BlockState sigma_pm = opts.corrupt_correction
                                ? pauli_correct(s1.state,
                                                BellOutcome::PsiPlus, "C")
                                : s1.state;
      for (BellOutcome oc2 : kAllBellOutcomes) {
        MeasureResult s2 = step2_clean(sigma_pm, oc2);
        worst = std::max(worst, td(ae_state(s2.state), ce));
      }
    }
  }
  std::ostringstream os;
  os << opts.instances << " instances x 16 outcome pairs, seed " << opts.seed;
  return make_result("round_trip", worst, tol, os.str());
}

SuiteResult suite_outcome_probabilities(const Options& opts) {
  const double tol = tolerance_for(opts, "probabilities", 1e-12);
  std::mt19937_64 rng(opts.seed);
  double worst = 0.0;
  for (int i = 0; i < opts.instances; ++i) {
    Instance inst = random_instance(rng, env_dim_for(opts, i));
    BlockState sigma_pm = step1(inst.psi, inst.env, inst.interaction1,
                                inst.tau, BellOutcome::PhiPlus)
                              .state;
    BlockState sigma_prime =
        redephase(sigma_pm, inst.interaction2, inst.t);
    for (BellOutcome oc : kAllBellOutcomes) {
      const double p1 =
          step1(inst.psi, inst.env, inst.interaction1, inst.tau, oc)
              .probability;
      const double p2c = step2_clean(sigma_pm, oc).probability;
      const double p2n = step2_noisy(sigma_prime, oc).probability;
      worst = std::max({worst, std::abs(p1 - 0.25), std::abs(p2c - 0.25),
                        std::abs(p2n - 0.25)});
    }
  }
  return make_result("outcome_probabilities", worst, tol,
                     "all Bell measurements at every stage");
}

SuiteResult suite_coherence_transfer(const Options& opts) {
  const double tol = tolerance_for(opts, "coherence", 1e-12);
  std::mt19937_64 rng(opts.seed);
  double worst = 0.0;
  for (int i = 0; i < opts.instances; ++i) {
    Instance inst = random_instance(rng, env_dim_for(opts, i));
    BlockState dephased = dephase(initial_state(inst.psi, inst.env),
                                  inst.interaction1, {"B", "C"}, inst.tau);
    const Complex c_bell = bell_coherence(dephased.trace_out("A"));
    MeasureResult s1 = step1(inst.psi, inst.env, inst.interaction1, inst.tau,
                             BellOutcome::PhiPlus);
    const Complex c_qubit = qubit_coherence(ce_state(s1.state), inst.psi);
    worst = std::max(worst, std::abs(c_bell - c_qubit));
  }
  return make_result("coherence_transfer", worst, tol,
                     "teleported-qubit factor vs Bell-state coherence");
}

SuiteResult suite_entanglement_proportionality(const Options& opts) {
  const double tol = tolerance_for(opts, "proportionality", 1e-10);
  std::mt19937_64 rng(opts.seed);
  double worst = 0.0;
  for (int i = 0; i < opts.instances; ++i) {
    Instance inst = random_instance(rng, env_dim_for(opts, i));
    // keep the boundary states in the mix
    if (i % 10 == 8) inst.psi = PureQubit(1.0, 0.0);
    if (i % 10 == 9) inst.psi = PureQubit(0.0, 1.0);
    BlockState dephased = dephase(initial_state(inst.psi, inst.env),
                                  inst.interaction1, {"B", "C"}, inst.tau);
    const double e_bce = bell_pair_entanglement(dephased.trace_out("A"));
    MeasureResult s1 = step1(inst.psi, inst.env, inst.interaction1, inst.tau,
                             BellOutcome::PhiPlus);
    const double e_ce = dephasing_entanglement(ce_state(s1.state));
    const double weight =
        4.0 * std::norm(inst.psi.alpha) * std::norm(inst.psi.beta);
    worst = std::max(worst, std::abs(e_ce - weight * e_bce));
    if (!entanglement_ratio_check(e_ce, e_bce, inst.psi, tol)) {
      worst = std::max(worst, tol * 2.0);
    }
  }
  return make_result("entanglement_proportionality", worst, tol,
                     "includes alpha in {0, 1} boundary instances");
}

SuiteResult suite_separability_consistency(const Options& opts) {
  const double atol = tolerance_for(opts, "separability", 1e-9);
  std::mt19937_64 rng(opts.seed);
  int mismatches = 0;
  double worst_sep_entanglement = 0.0;
  auto check = [&](const BlockState& rho_qe) {
    SeparabilityResult sep = separability_check(rho_qe, atol);
    const double e = dephasing_entanglement(rho_qe);
    if (sep.separable != (e < 1e-9)) ++mismatches;
    if (sep.separable) {
      worst_sep_entanglement = std::max(worst_sep_entanglement, e);
    }
  };
  for (int i = 0; i < opts.instances; ++i) {
    const Eigen::Index d = env_dim_for(opts, i);
    Instance inst =
        (i % 2 == 0) ? random_instance(rng, d) : separable_instance(rng, d);
    MeasureResult s1 = step1(inst.psi, inst.env, inst.interaction1, inst.tau,
                             BellOutcome::PhiPlus);
    check(ce_state(s1.state));
    BlockState sigma_prime = redephase(s1.state, inst.interaction2, inst.t);
    check(ae_state(step2_noisy(sigma_prime, BellOutcome::PhiPlus).state));
    check(ae_state(step2_noisy(sigma_prime, BellOutcome::PsiPlus).state));
  }

  // single-qubit-environment scenario at a generic time: the Phi branch is
  // entangled, the Psi branch separable
  scenarios::ScenarioConfig cfg;
  cfg.c0 = 0.8;
  cfg.phia = 0.5;
  cfg.phib = -0.5;
  scenarios::Interactions inter = scenarios::build_interactions(cfg);
  const double t = 0.7;
  MeasureResult s1 = step1(cfg.psi, cfg.environment(), inter.second, t,
                           BellOutcome::PhiPlus);
  BlockState sigma_prime = redephase(s1.state, inter.second, t);
  SeparabilityResult phi = separability_check(
      ae_state(step2_noisy(sigma_prime, BellOutcome::PhiPlus).state), atol);
  SeparabilityResult psi = separability_check(
      ae_state(step2_noisy(sigma_prime, BellOutcome::PsiPlus).state), atol);
  if (phi.separable || !psi.separable) ++mismatches;

  std::ostringstream os;
  os << mismatches << " mismatches between the separability condition and the "
     << "entanglement measure";
  SuiteResult result = make_result("separability_consistency",
                                   worst_sep_entanglement, 1e-9, os.str());
  result.passed = result.passed && mismatches == 0;
  return result;
}

SuiteResult suite_branch_claims(const Options& opts) {
  const double tol = tolerance_for(opts, "branches", 1e-12);
  const double tol_e = tolerance_for(opts, "branches_entanglement", 1e-10);
  std::mt19937_64 rng(opts.seed);
  double worst = 0.0;
  double worst_e = 0.0;
  for (int i = 0; i < opts.instances; ++i) {
    const Eigen::Index d = env_dim_for(opts, i);
    Instance inst = random_instance(rng, d);

    // step1 outcome classes: Phi+ == Phi-, Psi+ == Psi-, and the Psi class
    // equals the Phi class under the 00 <-> 11 interaction relabeling
    auto ce_for = [&](BellOutcome oc, const DephasingInteraction& w) {
      return ce_state(step1(inst.psi, inst.env, w, inst.tau, oc).state);
    };
    const BlockState ce_pp = ce_for(BellOutcome::PhiPlus, inst.interaction1);
    const BlockState ce_pm = ce_for(BellOutcome::PhiMinus, inst.interaction1);
    const BlockState ce_sp = ce_for(BellOutcome::PsiPlus, inst.interaction1);
    const BlockState ce_sm = ce_for(BellOutcome::PsiMinus, inst.interaction1);
    worst = std::max({worst, td(ce_pp, ce_pm), td(ce_sp, ce_sm)});
    worst = std::max(
        worst, td(ce_sp, ce_for(BellOutcome::PhiPlus,
                                swap_pointer_labels(inst.interaction1))));

    // second-step branch pairing on the redephased state
    MeasureResult s1 = step1(inst.psi, inst.env, inst.interaction1, inst.tau,
                             BellOutcome::PhiPlus);
    BlockState sigma_prime = redephase(s1.state, inst.interaction2, inst.t);
    auto ae_for = [&](BellOutcome oc) {
      return ae_state(step2_noisy(sigma_prime, oc).state);
    };
    const BlockState ae_phi = ae_for(BellOutcome::PhiPlus);
    const BlockState ae_psi = ae_for(BellOutcome::PsiPlus);
    worst = std::max({worst, td(ae_phi, ae_for(BellOutcome::PhiMinus)),
                      td(ae_psi, ae_for(BellOutcome::PsiMinus))});

    // separable first step: both branches carry the same entanglement
    Instance sep = separable_instance(rng, d);
    MeasureResult sep1 = step1(sep.psi, sep.env, sep.interaction1, sep.tau,
                               BellOutcome::PhiPlus);
    BlockState sep_prime = redephase(sep1.state, sep.interaction2, sep.t);
    const double e_phi = dephasing_entanglement(
        ae_state(step2_noisy(sep_prime, BellOutcome::PhiPlus).state));
    const double e_psi = dephasing_entanglement(
        ae_state(step2_noisy(sep_prime, BellOutcome::PsiPlus).state));
    worst_e = std::max(worst_e, std::abs(e_phi - e_psi));
  }

  // conjugate coherence factors when R01(tau) is Hermitian (first interaction
  // with w11 = w00)
  {
    std::mt19937_64 rng2(opts.seed + 1);
    const Eigen::Index d = 3;
    ComplexMatrix w = oracle::random_unitary(d, rng2);
    std::map<std::string, ComplexMatrix> ops = {
        {"00", w},
        {"01", oracle::random_unitary(d, rng2)},
        {"10", oracle::random_unitary(d, rng2)},
        {"11", w}};
    DephasingInteraction first(DephasingInteraction::Form::Unitary,
                               std::move(ops));
    PureQubit psi = oracle::random_pure_qubit(rng2);
    EnvDensity env(oracle::random_density(d, rng2));
    MeasureResult s1 = step1(psi, env, first, 1.0, BellOutcome::PhiPlus);
    BlockState sigma_prime = redephase(
        s1.state,
        oracle::random_interaction(d, rng2, DephasingInteraction::Form::Unitary),
        1.0);
    const Complex c_phi = qubit_coherence(
        ae_state(step2_noisy(sigma_prime, BellOutcome::PhiPlus).state), psi);
    const Complex c_psi = qubit_coherence(
        ae_state(step2_noisy(sigma_prime, BellOutcome::PsiPlus).state), psi);
    worst = std::max(worst, std::abs(c_phi - std::conj(c_psi)));
  }

  std::ostringstream os;
  os << "outcome-class pairing, interaction relabeling, conjugate factors; "
     << "max branch-entanglement gap on separable inputs " << worst_e
     << " (tol " << tol_e << ")";
  SuiteResult result = make_result("branch_claims", worst, tol, os.str());
  result.passed = result.passed && worst_e <= tol_e;
  return result;
}

SuiteResult suite_oracle_equivalence(const Options& opts) {
  const double tol = tolerance_for(opts, "oracle", 1e-10);
  std::mt19937_64 rng(opts.seed);
  double worst = 0.0;
  for (int i = 0; i < opts.instances; ++i) {
    Instance inst = random_instance(rng, env_dim_for(opts, i));
    const BellOutcome oc1 = kAllBellOutcomes[std::size_t(i) % 4];
    const BellOutcome oc2 = kAllBellOutcomes[std::size_t(i / 4) % 4];
    const bool noisy = (i % 2 == 0);

    std::optional<SecondStep> second =
        SecondStep{inst.interaction2, inst.t, oc2, noisy};
    StageTrace trace = run_pipeline(inst.psi, inst.env, inst.interaction1,
                                    inst.tau, oc1, second);

    auto result = oracle::full_run(
        inst.psi, inst.env, inst.interaction1, inst.tau, oc1,
        noisy ? std::make_optional(std::make_pair(inst.interaction2, inst.t))
              : std::nullopt,
        oc2);

    std::vector<const oracle::FullState*> dense = {&result.initial,
                                                   &result.dephased,
                                                   &result.post_step1};
    if (result.redephased) dense.push_back(&*result.redephased);
    dense.push_back(&result.post_step2);
    if (trace.size() != dense.size()) {
      return SuiteResult{"oracle_equivalence", false, 1.0, tol,
                         "stage count mismatch"};
    }
    for (std::size_t s = 0; s < dense.size(); ++s) {
      worst = std::max(worst, linalg::operator_norm(trace[s].state.to_full() -
                                                    dense[s]->matrix));
    }
    worst = std::max(worst, std::abs(trace[2].probability - result.prob1));
    worst = std::max(worst, std::abs(trace.back().probability - result.prob2));
  }
  std::ostringstream os;
  os << opts.instances << " instances over env dims {";
  for (std::size_t k = 0; k < opts.env_dims.size(); ++k) {
    os << (k ? "," : "") << opts.env_dims[k];
  }
  os << "}, seed " << opts.seed;
  return make_result("oracle_equivalence", worst, tol, os.str());
}

SuiteResult suite_degenerate_inputs(const Options& opts) {
  const double tol = tolerance_for(opts, "degenerate", 1e-12);
  std::mt19937_64 rng(opts.seed);
  double worst = 0.0;
  for (int i = 0; i < std::max(opts.instances / 4, 4); ++i) {
    const Eigen::Index d = env_dim_for(opts, i);
    PureQubit psi = oracle::random_pure_qubit(rng);
    EnvDensity env(oracle::random_density(d, rng));
    DephasingInteraction trivial = DephasingInteraction::identity(d);

    // textbook teleportation: identity interactions all the way through
    for (BellOutcome oc1 : kAllBellOutcomes) {
      MeasureResult s1 = step1(psi, env, trivial, 1.0, oc1);
      const ComplexMatrix c_state =
          ce_state(s1.state).system_density();
      worst = std::max(worst, linalg::trace_distance(c_state, psi.density()));
      for (BellOutcome oc2 : kAllBellOutcomes) {
        MeasureResult s2 = step2_clean(s1.state, oc2);
        const ComplexMatrix a_state =
            ae_state(s2.state).system_density();
        worst =
            std::max(worst, linalg::trace_distance(a_state, psi.density()));
        worst = std::max(
            worst, std::abs(linalg::uhlmann_fidelity(a_state, psi.density()) -
                            1.0));
      }
    }

    // t = 0 second dephasing reduces the noisy step to the clean one
    Instance inst = random_instance(rng, d);
    DephasingInteraction int2_gen = oracle::random_interaction(
        d, rng, DephasingInteraction::Form::Generator);
    MeasureResult s1 = step1(inst.psi, inst.env, inst.interaction1, inst.tau,
                             BellOutcome::PhiPlus);
    BlockState sigma_prime = redephase(s1.state, int2_gen, 0.0);
    worst = std::max(worst, td(sigma_prime, s1.state));
    for (BellOutcome oc2 : kAllBellOutcomes) {
      worst = std::max(worst, td(step2_noisy(sigma_prime, oc2).state,
                                 step2_clean(s1.state, oc2).state));
    }
  }
  return make_result("degenerate_inputs", worst, tol,
                     "identity interactions and t = 0 reductions");
}

std::vector<SuiteResult> run_all(const Options& opts) {
  return {
      suite_round_trip(opts),
      suite_outcome_probabilities(opts),
      suite_coherence_transfer(opts),
      suite_entanglement_proportionality(opts),
      suite_separability_consistency(opts),
      suite_branch_claims(opts),
      suite_oracle_equivalence(opts),
      suite_degenerate_inputs(opts),
  };
}

}  // namespace qetsim::verify
