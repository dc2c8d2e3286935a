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

#include "onticlab/property_suite.hpp"

#include <numbers>
#include <utility>

#include "onticlab/quadrature.hpp"

namespace onticlab {

double husimi_density(const qubit::OnticDirection& v, const QuantumState& psi) {
  const double d = v.dot(bloch_vector(psi).w);
  return std::max(0.0, (1.0 + d) / (4.0 * std::numbers::pi));
}

qubit::OnticDirection HusimiQubitPseudoModel::sample(const QuantumState& psi,
                                                     RandomStream& rng) const {
  // cos(alpha) has density (1 + c)/2 on [-1, 1]; inverting (1 + c)^2 / 4 = u.
  const double u = rng.uniform();
  const double azimuth = 2.0 * std::numbers::pi * rng.uniform();
  const double c = 2.0 * std::sqrt(u) - 1.0;
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  const Eigen::Matrix3d frame = frame_with_axis(bloch_vector(psi).w);
  return qubit::OnticDirection::normalized(frame * Eigen::Vector3d(s * std::cos(azimuth),
                                                                   s * std::sin(azimuth), c));
}

double HusimiQubitPseudoModel::density_or_support(const qubit::OnticDirection& v,
                                                  const QuantumState& psi) const {
  return husimi_density(v, psi);
}

qubit::OnticDirection HusimiQubitPseudoModel::evolve(const qubit::OnticDirection& v,
                                                     const UnitaryOp& u) const {
  return qubit::OnticDirection::normalized(qubit::rotation_for(u) * v.vector());
}

QuantumState HusimiQubitPseudoModel::evolve_preparation(const QuantumState& psi,
                                                        const UnitaryOp& u) const {
  return evolve_state(psi, u);
}

UnitaryOp HusimiQubitPseudoModel::compose(const UnitaryOp& first, const UnitaryOp& second) const {
  return second * first;
}

double HusimiQubitPseudoModel::event_probability(const qubit::OnticDirection& v,
                                                 const QuantumState& phi) const {
  return std::clamp(0.5 * (1.0 + bloch_vector(phi).w.dot(v.vector())), 0.0, 1.0);
}

double HusimiQubitPseudoModel::born_probability(const QuantumState& phi,
                                                const QuantumState& psi) const {
  return onticlab::born_probability(phi, psi);
}

double HusimiQubitPseudoModel::distance(const qubit::OnticDirection& a,
                                        const qubit::OnticDirection& b) const {
  return (a.vector() - b.vector()).norm();
}

SupportOverlapReport q_function_counterexample(const QuantumState& psi,
                                               const QuantumState& psi_perp) {
  if (std::abs(inner(psi, psi_perp)) > 1e-10) {
    throw std::invalid_argument("Husimi control requires orthogonal states");
  }
  SupportOverlapReport report;
  report.model = "husimi-q";
  integrate_sphere([&](const Eigen::Vector3d& v) {
    const auto dir = qubit::OnticDirection::normalized(v);
    if (husimi_density(dir, psi) > kSupportThreshold) {
      ++report.n_samples;
      const double foreign = husimi_density(dir, psi_perp);
      if (foreign > kSupportThreshold) {
        ++report.overlap_count;
        report.max_foreign_density = std::max(report.max_foreign_density, foreign);
      }
    }
    return 0.0;
  });
  return report;
}

int min_ontic_dimension(int dimension) {
  if (dimension < 2) {
    throw std::invalid_argument("Hilbert space dimension must be >= 2");
  }
  return 2 * dimension - 2;
}

DimensionAudit audit_dimension(std::string model, std::optional<int> hilbert_dimension,
                               int ontic_dimension) {
  DimensionAudit audit;
  audit.model = std::move(model);
  audit.hilbert_dimension = hilbert_dimension;
  audit.ontic_dimension = ontic_dimension;
  if (hilbert_dimension) {
    audit.bound = min_ontic_dimension(*hilbert_dimension);
    audit.satisfies = ontic_dimension >= *audit.bound;
  } else {
    audit.restricted_manifold = true;
    audit.satisfies = true;
  }
  return audit;
}

}  // namespace onticlab
