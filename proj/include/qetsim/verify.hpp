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

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qetsim/model.hpp"

namespace qetsim::verify {

struct Options {
  std::uint64_t seed = 20210701;
  int instances = 100;
  std::vector<Eigen::Index> env_dims = {2, 3, 4};
  bool corrupt_correction = false;  // negative control: sabotage the
                                    // round-trip suite's correction
  std::map<std::string, double> tol_overrides;
};

struct SuiteResult {
  std::string name;
  bool passed;
  double max_residual;
  double tolerance;
  std::string detail;
};

// Randomized property suites. Each draws its instances from the seeded rng
// in Options and reports the worst residual it saw.
SuiteResult suite_round_trip(const Options& opts);
SuiteResult suite_outcome_probabilities(const Options& opts);
SuiteResult suite_coherence_transfer(const Options& opts);
SuiteResult suite_entanglement_proportionality(const Options& opts);
SuiteResult suite_separability_consistency(const Options& opts);
SuiteResult suite_branch_claims(const Options& opts);
SuiteResult suite_oracle_equivalence(const Options& opts);
SuiteResult suite_degenerate_inputs(const Options& opts);

std::vector<SuiteResult> run_all(const Options& opts);

// Shared randomized-instance machinery (also used by the acceptance tests).
struct Instance {
  PureQubit psi;
  EnvDensity env;
  DephasingInteraction interaction1;
  DephasingInteraction interaction2;
  double tau = 1.0;
  double t = 1.0;
};

Instance random_instance(std::mt19937_64& rng, Eigen::Index env_dim);

/// Instance whose first dephasing leaves the teleported qubit separable from
/// the environment (conditional operators differing by a unitary that
/// commutes with the environment state); the second interaction is generic.
Instance separable_instance(std::mt19937_64& rng, Eigen::Index env_dim);

}  // namespace qetsim::verify
