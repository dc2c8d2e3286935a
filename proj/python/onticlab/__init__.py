# Copyright 2026 The onticlab Authors
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
"""Ontological (hidden-variable) models of quantum mechanics."""

from ._core import (
    ConfigError,
    DimensionMismatch,
    QuantumState,
    RandomStream,
    bell,
    bloch_vector,
    born_probability,
    derive_seed,
    dimension_audit,
    evolve_state,
    min_ontic_dimension,
    orthogonal_state,
    pauli,
    phase_space,
    qubit,
    random_orthogonal_state,
    random_state,
    random_unitary,
    run_experiment,
    same_ray,
    state_from_bloch,
    unitary_from_hamiltonian,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "DimensionMismatch",
    "QuantumState",
    "RandomStream",
    "bell",
    "bloch_vector",
    "born_probability",
    "derive_seed",
    "dimension_audit",
    "evolve_state",
    "min_ontic_dimension",
    "orthogonal_state",
    "pauli",
    "phase_space",
    "qubit",
    "random_orthogonal_state",
    "random_state",
    "random_unitary",
    "run_experiment",
    "same_ray",
    "state_from_bloch",
    "unitary_from_hamiltonian",
]
