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

#include "onticlab/qubit_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "onticlab/errors.hpp"
#include "onticlab/quadrature.hpp"

namespace onticlab::qubit {
namespace {

constexpr double kUnitTolerance = 1e-12;
constexpr double kPointSupportTolerance = 1e-10;
constexpr double kQuadratureAgreement = 1e-5;

// theta(x) with theta(0) = 1.
double heaviside(double x) noexcept { return x >= 0.0 ? 1.0 : 0.0; }

double hemisphere_density(const Eigen::Vector3d& v, const Eigen::Vector3d& w) noexcept {
  const double d = v.dot(w);
  return d > 0.0 ? d / std::numbers::pi : 0.0;
}

void require_qubit(const QuantumState& psi) {
  if (psi.dimension() != 2) {
    throw std::invalid_argument("qubit model requires N = 2, got N = " +
                                std::to_string(psi.dimension()));
  }
}

// Integral over the sphere of theta(u . v) * hemisphere_density(v, w), with the
// polar angle measured from w and the azimuth from the component of u normal
// to w. Every piece of the split domain has a smooth integrand.
double hemisphere_event_integral(const Eigen::Vector3d& u, const Eigen::Vector3d& w,
                                 int polar_nodes, int azimuth_nodes) {
  constexpr double pi = std::numbers::pi;
  Eigen::Matrix3d frame = frame_with_axis(w);
  const Eigen::Vector3d perp = u - u.dot(w) * w;
  if (perp.norm() > 1e-14) {
    frame.col(0) = perp.normalized();
    frame.col(1) = w.cross(frame.col(0));
  }
  const double c = u.dot(w);
  const double s = u.dot(frame.col(0));
  const double big_theta = std::atan2(s, c);

  std::vector<double> edges{0.0, pi / 2.0, pi};
  for (const double b : {pi / 2.0 - big_theta, big_theta - pi / 2.0, big_theta + pi / 2.0,
                         1.5 * pi - big_theta}) {
    if (b > 0.0 && b < pi) edges.push_back(b);
  }
  std::sort(edges.begin(), edges.end());

  const auto integrand = [&](double alpha, double phi) {
    const Eigen::Vector3d v =
        frame * Eigen::Vector3d(std::sin(alpha) * std::cos(phi),
                                std::sin(alpha) * std::sin(phi), std::cos(alpha));
    return heaviside(u.dot(v)) * hemisphere_density(v, w);
  };
  const QuadratureRule reference = gauss_legendre(azimuth_nodes, -1.0, 1.0);
  const auto integrate_arc = [&](double alpha, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double sum = 0.0;
    for (std::size_t j = 0; j < reference.nodes.size(); ++j) {
      sum += reference.weights[j] * integrand(alpha, mid + half * reference.nodes[j]);
    }
    return half * sum;
  };

  double total = 0.0;
  for (std::size_t piece = 0; piece + 1 < edges.size(); ++piece) {
    if (edges[piece + 1] - edges[piece] < 1e-15) continue;
    const QuadratureRule polar = gauss_legendre(polar_nodes, edges[piece], edges[piece + 1]);
    for (std::size_t i = 0; i < polar.nodes.size(); ++i) {
      const double alpha = polar.nodes[i];
      const double radial = s * std::sin(alpha);
      double ring = 0.0;
      const double arg = radial > 0.0 ? -c * std::cos(alpha) / radial : 2.0;
      if (arg <= -1.0 || arg >= 1.0) {
        ring = integrate_arc(alpha, 0.0, 2.0 * pi);
      } else {
        const double edge = std::acos(arg);
        ring = integrate_arc(alpha, -edge, edge) + integrate_arc(alpha, edge, 2.0 * pi - edge);
      }
      total += polar.weights[i] * std::sin(alpha) * ring;
    }
  }
  return total;
}

}  // namespace

OnticDirection::OnticDirection(const Eigen::Vector3d& v) : v_(v) {
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > kUnitTolerance) {
    throw std::invalid_argument("ontic direction must be a unit vector");
  }
}

OnticDirection OnticDirection::normalized(const Eigen::Vector3d& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite direction");
  }
  return OnticDirection(v / norm);
}

PauliDrive::PauliDrive(const Eigen::Vector3d& h) : h_(h) {
  if (!h.allFinite()) {
    throw std::invalid_argument("drive coefficients must be finite");
  }
}

HermitianOp PauliDrive::hamiltonian() const {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  for (int k = 0; k < 3; ++k) {
    m += h_(k) * pauli(k + 1).matrix();
  }
  return HermitianOp(std::move(m));
}

double support_parameter(QubitVariant variant) noexcept {
  return variant == QubitVariant::dispersion_free ? 0.5 : 0.0;
}

QubitVariant variant_from_support_parameter(double b) {
  if (b == 0.5) return QubitVariant::dispersion_free;
  if (b == 0.0) return QubitVariant::linear_response;
  throw std::invalid_argument("support parameter B must be 0 or 1/2");
}

double density(const OnticDirection& v, const QuantumState& psi) {
  require_qubit(psi);
  return hemisphere_density(v.vector(), bloch_vector(psi).w);
}

OnticDirection sample(const QuantumState& psi, RandomStream& rng) {
  const double u = rng.uniform();
  const double azimuth = 2.0 * std::numbers::pi * rng.uniform();
  return sample_from_uniforms(psi, u, azimuth);
}

OnticDirection sample_from_uniforms(const QuantumState& psi, double u, double azimuth) {
  require_qubit(psi);
  if (!(u >= 0.0 && u < 1.0)) {
    throw std::invalid_argument("inverse-transform variate must lie in [0, 1)");
  }
  const Eigen::Vector3d w = bloch_vector(psi).w;
  const Eigen::Matrix3d frame = frame_with_axis(w);
  const double cos_alpha = std::sqrt(1.0 - u);
  const double sin_alpha = std::sqrt(u);
  const Eigen::Vector3d v = sin_alpha * std::cos(azimuth) * frame.col(0) +
                            sin_alpha * std::sin(azimuth) * frame.col(1) + cos_alpha * w;
  return OnticDirection(v);
}

OnticDirection rotate(const OnticDirection& v, const PauliDrive& h, double dt) {
  const Eigen::Vector3d& coeffs = h.coefficients();
  const double magnitude = coeffs.norm();
  if (magnitude == 0.0 || dt == 0.0) return v;
  const Eigen::Vector3d axis = coeffs / magnitude;
  const double angle = 2.0 * magnitude * dt;
  const Eigen::Vector3d& x = v.vector();
  const double c = std::cos(angle);
  const Eigen::Vector3d rotated =
      c * x + std::sin(angle) * axis.cross(x) + (1.0 - c) * axis.dot(x) * axis;
  return OnticDirection(rotated);
}

OnticDirection rotate(const OnticDirection& v, std::span<const DriveSegment> segments) {
  OnticDirection out = v;
  for (const auto& segment : segments) {
    out = rotate(out, segment.drive, segment.duration);
  }
  return out;
}

UnitaryOp drive_unitary(std::span<const DriveSegment> segments) {
  UnitaryOp u = UnitaryOp::identity(2);
  for (const auto& segment : segments) {
    u = unitary_from_hamiltonian(segment.drive.hamiltonian(), segment.duration) * u;
  }
  return u;
}

Eigen::Matrix3d rotation_for(const UnitaryOp& u) {
  if (u.dimension() != 2) {
    throw DimensionMismatch("rotation_for requires a 2x2 unitary");
  }
  const std::array<HermitianOp, 3> sigma{pauli(1), pauli(2), pauli(3)};
  Eigen::Matrix3d r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r(i, j) = 0.5 * (sigma[i].matrix() * u.matrix() * sigma[j].matrix() *
                       u.matrix().adjoint())
                          .trace()
                          .real();
    }
  }
  return r;
}

double measure_event(const QuantumState& phi, const OnticDirection& v, QubitVariant variant) {
  require_qubit(phi);
  const double d = bloch_vector(phi).w.dot(v.vector());
  if (variant == QubitVariant::dispersion_free) return heaviside(d);
  return std::clamp(0.5 * (1.0 + d), 0.0, 1.0);
}

double born_check_exact(const QuantumState& phi, const QuantumState& psi,
                        QubitVariant variant) {
  require_qubit(phi);
  require_qubit(psi);
  const Eigen::Vector3d w = bloch_vector(psi).w;
  if (variant == QubitVariant::linear_response) {
    // The preparation is a point mass at w(psi).
    return measure_event(phi, OnticDirection::normalized(w), variant);
  }
  const Eigen::Vector3d u = bloch_vector(phi).w;
  const double coarse = hemisphere_event_integral(u, w, 64, 64);
  const double fine = hemisphere_event_integral(u, w, 128, 128);
  const double estimate = std::abs(fine - coarse);
  if (estimate > kQuadratureAgreement) {
    throw QuadratureError("sphere quadrature did not converge", estimate);
  }
  return fine;
}

std::string QubitModel::name() const {
  return variant_ == QubitVariant::dispersion_free ? "qubit-df" : "qubit-b0";
}

OnticDirection QubitModel::sample(const QuantumState& psi, RandomStream& rng) const {
  if (variant_ == QubitVariant::dispersion_free) return qubit::sample(psi, rng);
  require_qubit(psi);
  return OnticDirection::normalized(bloch_vector(psi).w);
}

double QubitModel::density_or_support(const OnticDirection& v, const QuantumState& psi) const {
  if (variant_ == QubitVariant::dispersion_free) return density(v, psi);
  require_qubit(psi);
  return (v.vector() - bloch_vector(psi).w).norm() < kPointSupportTolerance ? 1.0 : 0.0;
}

OnticDirection QubitModel::evolve(const OnticDirection& v, const UnitaryOp& u) const {
  return OnticDirection::normalized(rotation_for(u) * v.vector());
}

QuantumState QubitModel::evolve_preparation(const QuantumState& psi, const UnitaryOp& u) const {
  return evolve_state(psi, u);
}

UnitaryOp QubitModel::compose(const UnitaryOp& first, const UnitaryOp& second) const {
  return second * first;
}

double QubitModel::event_probability(const OnticDirection& v, const QuantumState& phi) const {
  return measure_event(phi, v, variant_);
}

double QubitModel::born_probability(const QuantumState& phi, const QuantumState& psi) const {
  return onticlab::born_probability(phi, psi);
}

double QubitModel::distance(const OnticDirection& a, const OnticDirection& b) const {
  return (a.vector() - b.vector()).norm();
}

}  // namespace onticlab::qubit
