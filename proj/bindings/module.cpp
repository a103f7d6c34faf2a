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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qetsim/entanglement.hpp"
#include "qetsim/oracle.hpp"
#include "qetsim/protocol.hpp"
#include "qetsim/scenarios.hpp"
#include "qetsim/verify.hpp"

namespace py = pybind11;
using namespace qetsim;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Bidirectional qubit teleportation with an explicitly tracked "
      "dephasing environment: block density matrices, conditional-unitary "
      "decoherence, Bell measurements, coherence and entanglement measures.";

  // ---------------------------------------------------------------- linalg
  auto linalg_mod = m.def_submodule("linalg", "dense complex kernel");
  linalg_mod.def("kron", &linalg::kron, py::arg("a"), py::arg("b"));
  linalg_mod.def("partial_trace", &linalg::partial_trace, py::arg("m"),
                 py::arg("factor_dims"), py::arg("keep"));
  linalg_mod.def(
      "herm_eig",
      [](const ComplexMatrix& h) {
        auto result = linalg::herm_eig(h);
        return py::make_tuple(result.values, result.vectors);
      },
      py::arg("h"), "eigenvalues (ascending) and unitary eigenvector matrix");
  linalg_mod.def("expm_unitary", &linalg::expm_unitary, py::arg("v"),
                 py::arg("t"), py::arg("hbar") = 1.0);
  linalg_mod.def("sqrt_psd", &linalg::sqrt_psd, py::arg("m"));
  linalg_mod.def("uhlmann_fidelity", &linalg::uhlmann_fidelity, py::arg("r1"),
                 py::arg("r2"));
  linalg_mod.def("trace_distance", &linalg::trace_distance, py::arg("r1"),
                 py::arg("r2"));
  linalg_mod.def("operator_norm", &linalg::operator_norm, py::arg("m"));
  linalg_mod.def("is_hermitian", &linalg::is_hermitian, py::arg("m"),
                 py::arg("tol"));
  linalg_mod.def("is_unitary", &linalg::is_unitary, py::arg("m"),
                 py::arg("tol"));
  linalg_mod.def("is_psd", &linalg::is_psd, py::arg("m"), py::arg("tol"));
  linalg_mod.def("is_density", &linalg::is_density, py::arg("m"),
                 py::arg("tol"));

  // ----------------------------------------------------------------- model
  py::class_<PureQubit>(m, "PureQubit")
      .def(py::init<Complex, Complex>(), py::arg("alpha"), py::arg("beta"))
      .def_readonly("alpha", &PureQubit::alpha)
      .def_readonly("beta", &PureQubit::beta)
      .def("density", &PureQubit::density)
      .def("__repr__", [](const PureQubit& q) {
        return "PureQubit(alpha=" + std::to_string(q.alpha.real()) + "+" +
               std::to_string(q.alpha.imag()) + "j, ...)";
      });

  py::class_<EnvDensity>(m, "EnvDensity")
      .def(py::init<ComplexMatrix>(), py::arg("matrix"))
      .def_property_readonly("dim", &EnvDensity::dim)
      .def_property_readonly("matrix", &EnvDensity::matrix);

  py::enum_<BellOutcome>(m, "BellOutcome")
      .value("PHI_PLUS", BellOutcome::PhiPlus)
      .value("PHI_MINUS", BellOutcome::PhiMinus)
      .value("PSI_PLUS", BellOutcome::PsiPlus)
      .value("PSI_MINUS", BellOutcome::PsiMinus);
  m.def("parse_bell_outcome", &parse_bell_outcome, py::arg("name"));
  m.def("bell_vector", &bell_vector, py::arg("outcome"));
  m.def("bell_projector", &bell_projector, py::arg("outcome"));
  m.def("correction_pauli", &correction_pauli, py::arg("outcome"));

  py::class_<DephasingInteraction> interaction(m, "DephasingInteraction");
  py::enum_<DephasingInteraction::Form>(interaction, "Form")
      .value("GENERATOR", DephasingInteraction::Form::Generator)
      .value("UNITARY", DephasingInteraction::Form::Unitary);
  interaction
      .def(py::init<DephasingInteraction::Form,
                    std::map<std::string, ComplexMatrix>>(),
           py::arg("form"), py::arg("ops"))
      .def_static("identity", &DephasingInteraction::identity,
                  py::arg("env_dim"))
      .def_property_readonly("form", &DephasingInteraction::form)
      .def_property_readonly("env_dim", &DephasingInteraction::env_dim)
      .def("covers", &DephasingInteraction::covers, py::arg("label"))
      .def("unitary_at", &DephasingInteraction::unitary_at, py::arg("label"),
           py::arg("duration"));

  py::class_<BlockState>(m, "BlockState")
      .def(py::init<std::vector<std::string>, std::vector<std::string>,
                    Eigen::Index, std::vector<ComplexMatrix>>(),
           py::arg("register_names"), py::arg("labels"), py::arg("env_dim"),
           py::arg("blocks"))
      .def_static("from_full", &BlockState::from_full, py::arg("matrix"),
                  py::arg("register_names"), py::arg("env_dim"),
                  py::arg("label_cutoff_tol") = 1e-12)
      .def("to_full", &BlockState::to_full)
      .def_property_readonly("register_names", &BlockState::register_names)
      .def_property_readonly("labels", &BlockState::labels)
      .def_property_readonly("env_dim", &BlockState::env_dim)
      .def_property_readonly("n_qubits", &BlockState::n_qubits)
      .def("has_label", &BlockState::has_label, py::arg("label"))
      .def("block",
           py::overload_cast<std::string_view, std::string_view>(
               &BlockState::block, py::const_),
           py::arg("row_label"), py::arg("col_label"))
      .def("trace", &BlockState::trace)
      .def("purity", &BlockState::purity)
      .def("scaled", &BlockState::scaled, py::arg("factor"))
      .def("trace_out", &BlockState::trace_out, py::arg("qubit"))
      .def("system_density", &BlockState::system_density)
      .def("pair_density", &BlockState::pair_density, py::arg("q1"),
           py::arg("q2"))
      .def("validate", &BlockState::validate, py::arg("tol") = 1e-9,
           py::arg("expect_normalized") = true);

  m.def("initial_state", &initial_state, py::arg("psi"), py::arg("env"));

  // -------------------------------------------------------------- protocol
  py::class_<MeasureResult>(m, "MeasureResult")
      .def_readonly("probability", &MeasureResult::probability)
      .def_readonly("state", &MeasureResult::state);

  py::class_<StageRecord>(m, "StageRecord")
      .def_readonly("stage", &StageRecord::stage)
      .def_readonly("state", &StageRecord::state)
      .def_readonly("outcome", &StageRecord::outcome)
      .def_readonly("probability", &StageRecord::probability);

  py::class_<SecondStep>(m, "SecondStep")
      .def(py::init([](const DephasingInteraction& interaction, double t,
                       BellOutcome outcome, bool noisy) {
             return SecondStep{interaction, t, outcome, noisy};
           }),
           py::arg("interaction"), py::arg("t"), py::arg("outcome"),
           py::arg("noisy") = true)
      .def_readonly("t", &SecondStep::t)
      .def_readonly("outcome", &SecondStep::outcome)
      .def_readonly("noisy", &SecondStep::noisy);

  m.def("dephase", &dephase, py::arg("state"), py::arg("interaction"),
        py::arg("target_qubits"), py::arg("duration"));
  m.def("bell_coherence", &bell_coherence, py::arg("state"));
  m.def("bell_measure", &bell_measure, py::arg("state"), py::arg("pair"),
        py::arg("outcome"));
  m.def("pauli_correct", &pauli_correct, py::arg("state"), py::arg("outcome"),
        py::arg("target"));
  m.def("detect_bell_state", &detect_bell_state, py::arg("state"),
        py::arg("pair"), py::arg("tol") = 1e-10);
  m.def("step1", &step1, py::arg("psi"), py::arg("env"),
        py::arg("interaction"), py::arg("tau"), py::arg("outcome"));
  m.def("step2_clean", &step2_clean, py::arg("sigma_pm"), py::arg("outcome"));
  m.def("redephase", &redephase, py::arg("sigma_pm"), py::arg("interaction2"),
        py::arg("t"));
  m.def("step2_noisy", &step2_noisy, py::arg("sigma_prime"),
        py::arg("outcome"), py::arg("resource") = BellOutcome::PhiPlus);
  m.def("qubit_coherence",
        py::overload_cast<const BlockState&>(&qubit_coherence),
        py::arg("rho_qe"));
  m.def("qubit_coherence",
        py::overload_cast<const BlockState&, const PureQubit&>(
            &qubit_coherence),
        py::arg("rho_qe"), py::arg("psi"));
  m.def("run_pipeline", &run_pipeline, py::arg("psi"), py::arg("env"),
        py::arg("interaction1"), py::arg("tau"), py::arg("outcome1"),
        py::arg("second") = std::nullopt);

  // ---------------------------------------------------------- entanglement
  py::class_<SeparabilityResult>(m, "SeparabilityResult")
      .def_readonly("separable", &SeparabilityResult::separable)
      .def_readonly("residual", &SeparabilityResult::residual);

  py::class_<CorrelationReport>(m, "CorrelationReport")
      .def_readonly("entanglement", &CorrelationReport::entanglement)
      .def_readonly("separable", &CorrelationReport::separable)
      .def_readonly("fidelity_term", &CorrelationReport::fidelity_term)
      .def_readonly("coherence", &CorrelationReport::coherence)
      .def_readonly("condition_residual",
                    &CorrelationReport::condition_residual);

  m.def("dephasing_entanglement", &dephasing_entanglement, py::arg("rho_qe"));
  m.def("bell_pair_entanglement", &bell_pair_entanglement, py::arg("bce"));
  m.def("entanglement_ratio_check", &entanglement_ratio_check,
        py::arg("e_ce"), py::arg("e_bce"), py::arg("psi"),
        py::arg("tol") = 1e-10);
  m.def("separability_check", &separability_check, py::arg("rho_qe"),
        py::arg("atol") = kDefaultSeparabilityTol);
  m.def("correlation_report", &correlation_report, py::arg("rho_qe"),
        py::arg("atol") = kDefaultSeparabilityTol);

  // ---------------------------------------------------------------- oracle
  auto oracle_mod =
      m.def_submodule("oracle", "dense brute-force reference simulator");
  py::class_<oracle::FullState>(oracle_mod, "FullState")
      .def_readonly("matrix", &oracle::FullState::matrix)
      .def_readonly("env_dim", &oracle::FullState::env_dim);
  py::class_<oracle::FullRunResult>(oracle_mod, "FullRunResult")
      .def_readonly("initial", &oracle::FullRunResult::initial)
      .def_readonly("dephased", &oracle::FullRunResult::dephased)
      .def_readonly("post_step1", &oracle::FullRunResult::post_step1)
      .def_readonly("redephased", &oracle::FullRunResult::redephased)
      .def_readonly("post_step2", &oracle::FullRunResult::post_step2)
      .def_readonly("prob1", &oracle::FullRunResult::prob1)
      .def_readonly("prob2", &oracle::FullRunResult::prob2);
  oracle_mod.def("full_run", &oracle::full_run, py::arg("psi"), py::arg("env"),
                 py::arg("interaction1"), py::arg("tau"), py::arg("outcome1"),
                 py::arg("second_dephasing"), py::arg("outcome2"));

  // ------------------------------------------------------------- scenarios
  auto scen = m.def_submodule("scenarios",
                              "single-qubit-environment example sweeps");
  py::enum_<scenarios::Branch>(scen, "Branch")
      .value("PHI", scenarios::Branch::Phi)
      .value("PSI", scenarios::Branch::Psi);
  py::class_<scenarios::ScenarioConfig>(scen, "ScenarioConfig")
      .def(py::init<>())
      .def_readwrite("c0", &scenarios::ScenarioConfig::c0)
      .def_readwrite("phi0", &scenarios::ScenarioConfig::phi0)
      .def_readwrite("phi1", &scenarios::ScenarioConfig::phi1)
      .def_readwrite("x", &scenarios::ScenarioConfig::x)
      .def_readwrite("y", &scenarios::ScenarioConfig::y)
      .def_readwrite("phia", &scenarios::ScenarioConfig::phia)
      .def_readwrite("phib", &scenarios::ScenarioConfig::phib)
      .def_readwrite("tau", &scenarios::ScenarioConfig::tau)
      .def_readwrite("t_grid", &scenarios::ScenarioConfig::t_grid)
      .def_readwrite("psi", &scenarios::ScenarioConfig::psi)
      .def("validate", &scenarios::ScenarioConfig::validate)
      .def("environment", &scenarios::ScenarioConfig::environment);
  py::class_<scenarios::Interactions>(scen, "Interactions")
      .def_readonly("first", &scenarios::Interactions::first)
      .def_readonly("second", &scenarios::Interactions::second);
  scen.def("build_interactions", &scenarios::build_interactions,
           py::arg("cfg"));
  scen.def("closed_form_coherence", &scenarios::closed_form_coherence,
           py::arg("cfg"), py::arg("t"), py::arg("branch"));
  scen.def("closed_form_phi_entanglement",
           &scenarios::closed_form_phi_entanglement, py::arg("cfg"),
           py::arg("t"));
  py::class_<scenarios::Fig1Row>(scen, "Fig1Row")
      .def_readonly("x2", &scenarios::Fig1Row::x2)
      .def_readonly("phib_t", &scenarios::Fig1Row::phib_t)
      .def_readonly("abs_c_phi", &scenarios::Fig1Row::abs_c_phi)
      .def_readonly("abs_c_psi", &scenarios::Fig1Row::abs_c_psi);
  py::class_<scenarios::Fig1Result>(scen, "Fig1Result")
      .def_readonly("rows", &scenarios::Fig1Result::rows)
      .def_readonly("max_closed_form_residual",
                    &scenarios::Fig1Result::max_closed_form_residual);
  py::class_<scenarios::Fig2Row>(scen, "Fig2Row")
      .def_readonly("c0", &scenarios::Fig2Row::c0)
      .def_readonly("phase_t", &scenarios::Fig2Row::phase_t)
      .def_readonly("e_phi", &scenarios::Fig2Row::e_phi)
      .def_readonly("e_psi", &scenarios::Fig2Row::e_psi)
      .def_readonly("e_diff", &scenarios::Fig2Row::e_diff);
  py::class_<scenarios::Fig2Result>(scen, "Fig2Result")
      .def_readonly("rows", &scenarios::Fig2Result::rows)
      .def_readonly("max_closed_form_residual",
                    &scenarios::Fig2Result::max_closed_form_residual);
  scen.def("fig1_table", &scenarios::fig1_table, py::arg("base"),
           py::arg("x2_values") = std::vector<double>{0.1, 0.3, 0.5});
  scen.def("fig2_table", &scenarios::fig2_table, py::arg("base"),
           py::arg("c0_values") =
               std::vector<double>{0.6, 0.7, 0.8, 0.9, 1.0});

  // ---------------------------------------------------------------- verify
  auto ver = m.def_submodule("verify", "randomized property suites");
  py::class_<verify::Options>(ver, "Options")
      .def(py::init<>())
      .def_readwrite("seed", &verify::Options::seed)
      .def_readwrite("instances", &verify::Options::instances)
      .def_readwrite("env_dims", &verify::Options::env_dims)
      .def_readwrite("corrupt_correction",
                     &verify::Options::corrupt_correction);
  py::class_<verify::SuiteResult>(ver, "SuiteResult")
      .def_readonly("name", &verify::SuiteResult::name)
      .def_readonly("passed", &verify::SuiteResult::passed)
      .def_readonly("max_residual", &verify::SuiteResult::max_residual)
      .def_readonly("tolerance", &verify::SuiteResult::tolerance)
      .def_readonly("detail", &verify::SuiteResult::detail);
  ver.def("run_all", &verify::run_all, py::arg("options"));
}
