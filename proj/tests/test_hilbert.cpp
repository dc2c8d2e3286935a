// Copyright 2026 The onticlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "onticlab/hilbert.hpp"
#include "onticlab/random.hpp"
#include "oracles.hpp"

namespace onticlab {
namespace {

ComplexMatrix random_hermitian(int n, RandomStream& rng) {
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  }
  return 0.5 * (g + g.adjoint());
}

TEST(QuantumState, RejectsUnnormalizedAndTooSmall) {
  ComplexVector v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(QuantumState{v}, std::invalid_argument);
  ComplexVector one(1);
  one << 1.0;
  EXPECT_THROW(QuantumState{one}, std::invalid_argument);
  EXPECT_THROW(QuantumState::normalized(ComplexVector::Zero(3)), std::invalid_argument);
}

TEST(QuantumState, NormalizesWithinTolerance) {
  ComplexVector v(2);
  v << 1.0 + 1e-9, 0.0;
  const QuantumState s(v);
  EXPECT_NEAR(s.amplitudes().norm(), 1.0, 1e-15);
  const QuantumState b = QuantumState::basis(4, 2);
  EXPECT_EQ(b.dimension(), 4);
  EXPECT_EQ(b[2], Complex(1.0, 0.0));
  EXPECT_THROW(QuantumState::basis(3, 3), std::out_of_range);
}

TEST(Operators, ValidateHermiticityAndUnitarity) {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 0.0, 0.0;
  EXPECT_THROW(HermitianOp{m}, std::invalid_argument);
  EXPECT_THROW(UnitaryOp{m}, std::invalid_argument);
  for (int k = 1; k <= 3; ++k) {
    const ComplexMatrix p = pauli(k).matrix();
    EXPECT_LT(max_abs_difference(p * p, ComplexMatrix::Identity(2, 2)), 1e-15);
  }
  EXPECT_THROW(pauli(0), std::out_of_range);
}

TEST(Born, OverlapOfBasisStates) {
  const QuantumState a = QuantumState::basis(3, 0);
  const QuantumState b = QuantumState::basis(3, 1);
  EXPECT_EQ(born_probability(a, b), 0.0);
  EXPECT_EQ(born_probability(a, a), 1.0);
  const QuantumState plus = QuantumState::normalized(ComplexVector::Ones(2));
  EXPECT_NEAR(born_probability(plus, QuantumState::basis(2, 0)), 0.5, 1e-15);
}

TEST(Bloch, MatchesDensityMatrixTrace) {
  RandomStream rng(11);
  for (int i = 0; i < 50; ++i) {
    const QuantumState psi = random_state(2, rng);
    const Eigen::Vector3d w = bloch_vector(psi).w;
    EXPECT_LT((w - oracle::bloch(psi.amplitudes())).norm(), 1e-12);
    EXPECT_NEAR(w.norm(), 1.0, 1e-12);
    EXPECT_TRUE(same_ray(state_from_bloch(w), psi, 1e-9));
    const QuantumState perp = orthogonal_state(psi);
    EXPECT_LT(std::abs(inner(psi, perp)), 1e-14);
    EXPECT_LT((bloch_vector(perp).w + w).norm(), 1e-12);
  }
}

TEST(Bloch, PoleStates) {
  EXPECT_LT((bloch_vector(QuantumState::basis(2, 0)).w - Eigen::Vector3d(0, 0, 1)).norm(), 1e-15);
  EXPECT_LT((bloch_vector(QuantumState::basis(2, 1)).w - Eigen::Vector3d(0, 0, -1)).norm(), 1e-15);
  EXPECT_TRUE(same_ray(state_from_bloch(Eigen::Vector3d(0, 0, -1)), QuantumState::basis(2, 1)));
}

TEST(SameRay, IgnoresGlobalPhase) {
  RandomStream rng(3);
  const QuantumState psi = random_state(3, rng);
  const QuantumState rotated(psi.amplitudes() * std::polar(1.0, 0.7));
  EXPECT_TRUE(same_ray(psi, rotated));
  EXPECT_FALSE(same_ray(psi, random_orthogonal_state(psi, rng)));
}

TEST(Evolution, MatchesEigendecompositionAndRk4) {
  RandomStream rng(5);
  for (const int n : {2, 3, 4}) {
    const HermitianOp h(random_hermitian(n, rng));
    const double t = 1.3;
    const UnitaryOp u = unitary_from_hamiltonian(h, t);
    EXPECT_LT(max_abs_difference(u.matrix(), oracle::unitary_by_eigen(h.matrix(), t)), 1e-11);
    const QuantumState psi = random_state(n, rng);
    const ComplexVector reference = oracle::schroedinger_rk4(h.matrix(), psi.amplitudes(), t);
    EXPECT_LT((evolve_state(psi, u).amplitudes() - reference).norm(), 1e-9);
  }
  EXPECT_THROW(evolve_state(QuantumState::basis(3, 0), UnitaryOp::identity(2)),
               std::invalid_argument);
}

TEST(Haar, RandomUnitaryIsUnitaryWithHaarMoments) {
  RandomStream rng(17);
  const int n = 3;
  const int trials = 20000;
  double m2 = 0.0;
  double m4 = 0.0;
  for (int i = 0; i < trials; ++i) {
    const UnitaryOp u = random_unitary(n, rng);
    const double x = std::norm(u.matrix()(1, 2));
    m2 += x;
    m4 += x * x;
  }
  m2 /= trials;
  m4 /= trials;
  EXPECT_NEAR(m2, 1.0 / n, 0.01);
  EXPECT_NEAR(m4, 2.0 / (n * (n + 1.0)), 0.01);
}

TEST(Haar, RandomStatesAndOrthogonalPartners) {
  RandomStream rng(23);
  double first = 0.0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) {
    const QuantumState psi = random_state(4, rng);
    first += std::norm(psi[0]);
    if (i < 200) {
      const QuantumState perp = random_orthogonal_state(psi, rng);
      EXPECT_LT(std::abs(inner(psi, perp)), 1e-13);
    }
  }
  EXPECT_NEAR(first / trials, 0.25, 0.01);
}

TEST(Random, DerivedSeedsAreStableAndDistinct) {
  EXPECT_EQ(derive_seed(1, "born-test/qubit-df", 3), derive_seed(1, "born-test/qubit-df", 3));
  EXPECT_NE(derive_seed(1, "born-test/qubit-df", 3), derive_seed(1, "born-test/qubit-df", 4));
  EXPECT_NE(derive_seed(1, "born-test/qubit-df", 3), derive_seed(1, "born-test/qubit-b0", 3));
  EXPECT_NE(derive_seed(1, "a", 0), derive_seed(2, "a", 0));
  RandomStream a(99);
  RandomStream b(99);
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform();
    EXPECT_EQ(u, b.uniform());
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

}  // namespace
}  // namespace onticlab
