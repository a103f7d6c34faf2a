# Copyright 2026 The qetsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Bidirectional qubit teleportation with an explicitly tracked dephasing
environment.

The heavy lifting lives in the ``_core`` extension module; this package
re-exports its public surface.
"""

from qetsim._core import (  # noqa: F401
    BellOutcome,
    BlockState,
    CorrelationReport,
    DephasingInteraction,
    EnvDensity,
    MeasureResult,
    PureQubit,
    SecondStep,
    SeparabilityResult,
    StageRecord,
    bell_coherence,
    bell_measure,
    bell_projector,
    bell_vector,
    correction_pauli,
    correlation_report,
    dephase,
    dephasing_entanglement,
    bell_pair_entanglement,
    detect_bell_state,
    entanglement_ratio_check,
    initial_state,
    linalg,
    oracle,
    parse_bell_outcome,
    pauli_correct,
    qubit_coherence,
    redephase,
    run_pipeline,
    scenarios,
    separability_check,
    step1,
    step2_clean,
    step2_noisy,
    verify,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
