# Copyright 2026 The wwpi Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Which-way path-integral simulator."""

from ._core import (
    BlochAngles,
    ConfigError,
    DegenerateDistributionError,
    DomainError,
    Error,
    MaxEntangledError,
    NormalizationError,
    OutcomeDistribution,
    ParametrizationError,
    SchmidtForm,
    ShapeError,
    SizeError,
    TopologyError,
    chsh_search,
    correlation,
    ghz,
    ghz_parity,
    history_count,
    schmidt,
    simulate_circuit_json,
    single_qubit,
    two_qubit,
    verify,
)

__all__ = [
    "BlochAngles",
    "ConfigError",
    "DegenerateDistributionError",
    "DomainError",
    "Error",
    "MaxEntangledError",
    "NormalizationError",
    "OutcomeDistribution",
    "ParametrizationError",
    "SchmidtForm",
    "ShapeError",
    "SizeError",
    "TopologyError",
    "chsh_search",
    "correlation",
    "ghz",
    "ghz_parity",
    "history_count",
    "schmidt",
    "simulate_circuit_json",
    "single_qubit",
    "two_qubit",
    "verify",
]
