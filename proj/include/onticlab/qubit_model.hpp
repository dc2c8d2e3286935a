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

#pragma once

#include <optional>
#include <span>
#include <string>

#include <Eigen/Dense>

#include "onticlab/hilbert.hpp"
#include "onticlab/random.hpp"

// Hemisphere ontological model of a two-state system. The ontic state is a
// unit vector v on the sphere; a state psi with Bloch vector w prepares
//
//   rho(v | psi) = (1/pi) (v . w) theta(v . w),
//
// unitary evolution rotates v rigidly (dv/dt = 2 h x v for H = sum_k h_k
// sigma_k), and the event |phi> fires with probability theta(w(phi) . v).
// The linear-response variant (support parameter B = 0) prepares the point
// mass at v = w(psi) and uses P(phi | v) = (1 + w(phi) . v) / 2.
namespace onticlab::qubit {

/// Unit 3-vector; the ontic state of the qubit model.
class OnticDirection {
 public:
  /// Throws std::invalid_argument unless | |v| - 1 | <= 1e-12.
  explicit OnticDirection(const Eigen::Vector3d& v);
  static OnticDirection normalized(const Eigen::Vector3d& v);

  const Eigen::Vector3d& vector() const noexcept { return v_; }
  double dot(const Eigen::Vector3d& other) const noexcept { return v_.dot(other); }

 private:
  Eigen::Vector3d v_;
};

/// Real coefficients h_k of H = sum_k h_k sigma_k (units of energy).
class PauliDrive {
 public:
  explicit PauliDrive(const Eigen::Vector3d& h);

  const Eigen::Vector3d& coefficients() const noexcept { return h_; }
  HermitianOp hamiltonian() const;

 private:
  Eigen::Vector3d h_;
};

/// A drive held constant for `duration`.
struct DriveSegment {
  PauliDrive drive;
  double duration;
};

/// Support parameter B of the model family; only the two members with a
/// known measurement rule are provided.
enum class QubitVariant {
  dispersion_free,  ///< B = 1/2
  linear_response,  ///< B = 0
};

double support_parameter(QubitVariant variant) noexcept;
/// Throws std::invalid_argument unless B is 0 or 1/2.
QubitVariant variant_from_support_parameter(double b);

/// Hemisphere density (1/pi)(v . w) theta(v . w) of the dispersion-free variant.
double density(const OnticDirection& v, const QuantumState& psi);

/// Draws v from the hemisphere density of psi.
OnticDirection sample(const QuantumState& psi, RandomStream& rng);

/// Inverse-transform map behind sample(): polar angle alpha from w(psi) with
/// cos(alpha) = sqrt(1 - u), azimuth `azimuth` in the frame aligned with w(psi).
/// u = 0 returns w(psi) itself.
OnticDirection sample_from_uniforms(const QuantumState& psi, double u, double azimuth);

/// Exact solution of dv/dt = 2 h x v for constant h: rotation about h by the
/// angle 2 |h| dt.
OnticDirection rotate(const OnticDirection& v, const PauliDrive& h, double dt);

/// Sequential application of piecewise-constant drive segments.
OnticDirection rotate(const OnticDirection& v, std::span<const DriveSegment> segments);

/// Unitary generated by piecewise-constant drive segments (first segment first).
UnitaryOp drive_unitary(std::span<const DriveSegment> segments);

/// SO(3) matrix R with w(U psi) = R w(psi): R_ij = tr(sigma_i U sigma_j U^dag) / 2.
Eigen::Matrix3d rotation_for(const UnitaryOp& u);

/// Probability that the event |phi> fires given ontic state v.
/// Dispersion-free: theta(w(phi) . v) with theta(0) = 1. Linear response:
/// (1 + w(phi) . v) / 2.
double measure_event(const QuantumState& phi, const OnticDirection& v, QubitVariant variant);

/// Deterministic evaluation of the integral of measure_event x density over
/// the sphere. The dispersion-free integrand is split along its two
/// discontinuity circles and integrated piecewise with Gauss-Legendre rules;
/// the linear-response density is a point mass and is evaluated directly.
/// Throws QuadratureError when two resolutions disagree by more than 1e-6.
double born_check_exact(const QuantumState& phi, const QuantumState& psi,
                        QubitVariant variant);

/// The qubit model behind the common ontological-model contract.
class QubitModel {
 public:
  using Preparation = QuantumState;
  using OnticState = OnticDirection;
  using Evolution = UnitaryOp;
  using Event = QuantumState;

  explicit QubitModel(QubitVariant variant = QubitVariant::dispersion_free)
      : variant_(variant) {}

  QubitVariant variant() const noexcept { return variant_; }
  std::string name() const;
  std::optional<int> hilbert_dimension() const noexcept { return 2; }
  int ontic_dimension() const noexcept { return 2; }
  bool dispersion_free() const noexcept {
    return variant_ == QubitVariant::dispersion_free;
  }

  OnticDirection sample(const QuantumState& psi, RandomStream& rng) const;
  /// Hemisphere density for B = 1/2; for B = 0 the support indicator of the
  /// point mass at w(psi) (1 within 1e-10, else 0).
  double density_or_support(const OnticDirection& v, const QuantumState& psi) const;
  OnticDirection evolve(const OnticDirection& v, const UnitaryOp& u) const;
  QuantumState evolve_preparation(const QuantumState& psi, const UnitaryOp& u) const;
  UnitaryOp compose(const UnitaryOp& first, const UnitaryOp& second) const;
  double event_probability(const OnticDirection& v, const QuantumState& phi) const;
  double born_probability(const QuantumState& phi, const QuantumState& psi) const;
  double distance(const OnticDirection& a, const OnticDirection& b) const;

 private:
  QubitVariant variant_;
};

}  // namespace onticlab::qubit
