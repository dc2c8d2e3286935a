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
import csv
import io
import json
import math
import os
import subprocess

import numpy as np
import pytest

import onticlab
from onticlab import bell, phase_space, qubit


def test_states_and_bloch_vectors():
    rng = onticlab.RandomStream(3)
    psi = onticlab.random_state(2, rng)
    w = onticlab.bloch_vector(psi)
    assert w.shape == (3,)
    assert abs(np.linalg.norm(w) - 1.0) < 1e-12
    perp = onticlab.orthogonal_state(psi)
    assert onticlab.born_probability(perp, psi) < 1e-28
    assert onticlab.same_ray(onticlab.state_from_bloch(w), psi, 1e-9)
    u = onticlab.random_unitary(3, rng)
    assert np.allclose(u @ u.conj().T, np.eye(3), atol=1e-12)
    with pytest.raises(ValueError):
        onticlab.QuantumState(np.zeros(2, dtype=complex))


def test_rotation_matches_schroedinger_evolution():
    rng = onticlab.RandomStream(5)
    psi = onticlab.random_state(2, rng)
    h = np.array([0.3, -1.1, 0.4])
    t = 0.9
    ham = sum(h[k] * onticlab.pauli(k + 1) for k in range(3))
    evolved = onticlab.evolve_state(psi, onticlab.unitary_from_hamiltonian(ham, t))
    rotated = qubit.rotate(onticlab.bloch_vector(psi), h, t)
    assert np.linalg.norm(rotated - onticlab.bloch_vector(evolved)) < 1e-10


def test_qubit_born_quadrature_and_monte_carlo():
    rng = onticlab.RandomStream(11)
    psi = onticlab.random_state(2, rng)
    phi = onticlab.random_state(2, rng)
    exact = onticlab.born_probability(phi, psi)
    assert abs(qubit.born_check_exact(phi, psi) - exact) < 1e-6
    report = qubit.check_born_rule(psi, phi, 20000, 7)
    assert report["passed"]
    assert report["n"] == 20000


def test_disjointness_and_husimi_control():
    rng = onticlab.RandomStream(2)
    psi = onticlab.random_state(2, rng)
    perp = onticlab.orthogonal_state(psi)
    assert qubit.check_disjointness(psi, perp, 2000, 1)["overlap_count"] == 0
    assert qubit.check_disjointness(psi, perp, 2000, 1, husimi=True)["overlap_count"] > 0


def test_bell_hand_checked_orderings():
    chi = onticlab.QuantumState(np.ones(3, dtype=complex))
    basis = np.eye(3, dtype=complex)
    assert bell.compare_orderings(chi, basis, [2, 3, 1], 0.5) == (2, 3)
    assert bell.measure(chi, 0.2, basis) == 1
    weights = bell.cumulative_weights(chi, basis)
    assert weights == pytest.approx([1 / 3, 2 / 3, 1.0], abs=1e-15)
    assert bell.contextuality_witness(chi, basis, [1, 2, 3]) is None


def test_wigner_marginal_and_flow():
    g = phase_space.GaussianStateParams(0.5, -0.2, 0.8, 0.3)
    for q in np.linspace(-2, 3, 11):
        assert abs(phase_space.numeric_marginal_q_density(q, g)
                   - phase_space.marginal_q_density(q, g)) < 1e-10
    flow = phase_space.SymplecticFlow.generated_by(
        phase_space.QuadraticHamiltonian.harmonic(), math.pi / 2)
    q, p = flow.apply(0.3, -1.2)
    assert q == pytest.approx(-1.2, abs=1e-14)
    assert p == pytest.approx(-0.3, abs=1e-14)
    assert abs(np.linalg.det(flow.linear) - 1.0) < 1e-12
    mean, var = phase_space.quadrature_law(g, 0.0)
    assert mean == pytest.approx(0.5)
    assert var == pytest.approx(0.4)


def test_dimension_audit():
    rows = {r["model"]: r for r in onticlab.dimension_audit(3)}
    assert rows["bell-df"]["ontic_dim"] == 5 and rows["bell-df"]["bound"] == 4
    assert rows["bell-ndf"]["ontic_dim"] == 4
    assert rows["qubit-df"]["satisfies"]
    assert rows["wigner-gaussian"]["restricted_manifold"]
    assert onticlab.min_ontic_dimension(4) == 6


def test_run_experiment_is_deterministic():
    a = onticlab.run_experiment("born-test", model="bell-df", N=4, samples=2000, seed=9)
    b = onticlab.run_experiment("born-test", model="bell-df", N=4, samples=2000, seed=9,
                                threads=1)
    assert a["report"] == b["report"]
    assert a["all_passed"]
    rows = list(csv.DictReader(io.StringIO(a["report"])))
    assert len(rows) == 20
    assert all(r["pass"] == "true" for r in rows)
    doc = json.loads(onticlab.run_experiment("contextuality-demo", N=3, format="json")["report"])
    assert doc["witnesses"]
    with pytest.raises(ValueError):
        onticlab.run_experiment("born-test", samples=10)


@pytest.mark.skipif("ONTICLAB_CLI" not in os.environ, reason="command-line tool not built")
def test_cli_round_trip(tmp_path):
    out = tmp_path / "audit.json"
    done = subprocess.run([os.environ["ONTICLAB_CLI"], "dimension-audit", "--format", "json",
                           "--out", str(out)], capture_output=True, text=True)
    assert done.returncode == 0
    assert len(json.loads(out.read_text())["audits"]) == 5
