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
#include <vector>

#include "onticlab/qubit_model.hpp"
#include "onticlab/random.hpp"
#include "oracles.hpp"

namespace onticlab::qubit {
namespace {

constexpr double pi = std::numbers::pi;

TEST(OnticDirection, RequiresUnitVector) {
  EXPECT_THROW(OnticDirection(Eigen::Vector3d(1.0, 1.0, 0.0)), std::invalid_argument);
  EXPECT_NO_THROW(OnticDirection(Eigen::Vector3d(0.0, 0.0, 1.0)));
  EXPECT_THROW(OnticDirection::normalized(Eigen::Vector3d::Zero()), std::invalid_argument);
}

TEST(SupportParameter, OnlyTwoVariants) {
  EXPECT_EQ(variant_from_support_parameter(0.5), QubitVariant::dispersion_free);
  EXPECT_EQ(variant_from_support_parameter(0.0), QubitVariant::linear_response);
  EXPECT_THROW(variant_from_support_parameter(0.3), std::invalid_argument);
  EXPECT_EQ(support_parameter(QubitVariant::dispersion_free), 0.5);
}

TEST(Density, IntegratesToOneOnTheHemisphere) {
  RandomStream rng(8);
  for (int i = 0; i < 3; ++i) {
    const QuantumState psi = random_state(2, rng);
    const double total = oracle::sphere_midpoint(
        [&](const Eigen::Vector3d& v) { return density(OnticDirection(v.normalized()), psi); });
    EXPECT_NEAR(total, 1.0, 2e-3);
  }
  const QuantumState up = QuantumState::basis(2, 0);
  EXPECT_NEAR(density(OnticDirection(Eigen::Vector3d(0, 0, 1)), up), 1.0 / pi, 1e-15);
  EXPECT_EQ(density(OnticDirection(Eigen::Vector3d(0, 0, -1)), up), 0.0);
}

TEST(Sampling, InverseTransformEndpointsAndMoments) {
  const QuantumState psi = state_from_bloch(Eigen::Vector3d(0.6, 0.0, 0.8));
  const Eigen::Vector3d w = bloch_vector(psi).w;
  EXPECT_LT((sample_from_uniforms(psi, 0.0, 1.0).vector() - w).norm(), 1e-12);
  EXPECT_NEAR(sample_from_uniforms(psi, 1.0 - 1e-16, 0.3).dot(w), 0.0, 1e-7);

  RandomStream rng(12);
  const int n = 200000;
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  double second = 0.0;
  for (int i = 0; i < n; ++i) {
    const OnticDirection v = sample(psi, rng);
    ASSERT_GE(v.dot(w), 0.0);
    mean += v.vector();
    second += v.dot(w) * v.dot(w);
  }
  mean /= n;
  // For density cos(alpha)/pi on the hemisphere: E[v] = (2/3) w, E[(v.w)^2] = 1/2.
  EXPECT_LT((mean - 2.0 / 3.0 * w).norm(), 5e-3);
  EXPECT_NEAR(second / n, 0.5, 5e-3);
}

TEST(Rotation, QuarterTurnAboutZ) {
  const OnticDirection x(Eigen::Vector3d(1, 0, 0));
  const OnticDirection out = rotate(x, PauliDrive(Eigen::Vector3d(0, 0, 1)), pi / 4.0);
  EXPECT_LT((out.vector() - Eigen::Vector3d(0, 1, 0)).norm(), 1e-12);
  const OnticDirection same = rotate(x, PauliDrive(Eigen::Vector3d::Zero()), 5.0);
  EXPECT_LT((same.vector() - x.vector()).norm(), 1e-15);
}

TEST(Rotation, AgreesWithIntegratedSchroedingerEquation) {
  RandomStream rng(31);
  for (int i = 0; i < 10; ++i) {
    const QuantumState psi = random_state(2, rng);
    const PauliDrive drive(Eigen::Vector3d(rng.normal(), rng.normal(), rng.normal()));
    const double t = 2.0 * rng.uniform();
    const Eigen::VectorXcd reference =
        oracle::schroedinger_rk4(drive.hamiltonian().matrix(), psi.amplitudes(), t);
    const OnticDirection rotated =
        rotate(OnticDirection::normalized(bloch_vector(psi).w), drive, t);
    EXPECT_LT((rotated.vector() - oracle::bloch(reference)).norm(), 1e-9);
  }
}

TEST(Rotation, SegmentsComposeLikeUnitaries) {
  RandomStream rng(7);
  std::vector<DriveSegment> segments;
  for (int i = 0; i < 4; ++i) {
    segments.push_back({PauliDrive(Eigen::Vector3d(rng.normal(), rng.normal(), rng.normal())),
                        rng.uniform()});
  }
  const QuantumState psi = random_state(2, rng);
  const OnticDirection start = OnticDirection::normalized(bloch_vector(psi).w);
  const OnticDirection piecewise = rotate(start, segments);
  const Eigen::Vector3d via_state = bloch_vector(evolve_state(psi, drive_unitary(segments))).w;
  EXPECT_LT((piecewise.vector() - via_state).norm(), 1e-12);
  const Eigen::Matrix3d r = rotation_for(drive_unitary(segments));
  EXPECT_LT((r * start.vector() - via_state).norm(), 1e-12);
  EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
  EXPECT_LT((r.transpose() * r - Eigen::Matrix3d::Identity()).norm(), 1e-12);
}

TEST(Measurement, DispersionFreeAndLinearResponseKernels) {
  const QuantumState up = QuantumState::basis(2, 0);
  const OnticDirection tilted = OnticDirection::normalized(Eigen::Vector3d(1, 0, 1));
  EXPECT_EQ(measure_event(up, tilted, QubitVariant::dispersion_free), 1.0);
  EXPECT_EQ(measure_event(orthogonal_state(up), tilted, QubitVariant::dispersion_free), 0.0);
  EXPECT_NEAR(measure_event(up, tilted, QubitVariant::linear_response),
              0.5 * (1.0 + 1.0 / std::sqrt(2.0)), 1e-15);
  const OnticDirection equator(Eigen::Vector3d(1, 0, 0));
  EXPECT_EQ(measure_event(up, equator, QubitVariant::dispersion_free), 1.0);
}

TEST(BornExact, QuadratureMatchesOverlapAndBruteForceGrid) {
  RandomStream rng(101);
  for (int i = 0; i < 5; ++i) {
    const QuantumState psi = random_state(2, rng);
    const QuantumState phi = random_state(2, rng);
    const double exact = born_probability(phi, psi);
    const double quad = born_check_exact(phi, psi, QubitVariant::dispersion_free);
    EXPECT_NEAR(quad, exact, 1e-6);
    const double brute = oracle::sphere_midpoint([&](const Eigen::Vector3d& v) {
      const OnticDirection d(v.normalized());
      return measure_event(phi, d, QubitVariant::dispersion_free) * density(d, psi);
    });
    EXPECT_NEAR(brute, exact, 3e-3);
    EXPECT_NEAR(born_check_exact(phi, psi, QubitVariant::linear_response), exact, 1e-14);
  }
}

TEST(QubitModel, ContractValues) {
  const QubitModel df;
  const QubitModel b0(QubitVariant::linear_response);
  EXPECT_EQ(df.name(), "qubit-df");
  EXPECT_EQ(b0.name(), "qubit-b0");
  EXPECT_TRUE(df.dispersion_free());
  EXPECT_FALSE(b0.dispersion_free());
  EXPECT_EQ(df.ontic_dimension(), 2);
  RandomStream rng(4);
  const QuantumState psi = random_state(2, rng);
  const OnticDirection point = b0.sample(psi, rng);
  EXPECT_EQ(b0.density_or_support(point, psi), 1.0);
  EXPECT_EQ(b0.density_or_support(point, orthogonal_state(psi)), 0.0);
}

}  // namespace
}  // namespace onticlab::qubit
