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

#include <limits>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "onticlab/random.hpp"

// Gaussian Wigner-function model of one bosonic mode, with canonical pair
// (q, p), [q, p] = i and a = (q + i p)/sqrt(2). The Gaussian state
//
//   psi(x) = (pi a)^{-1/4} exp(-(x-q0)^2/(2a) + i p0 (x-q0) + i b (x-q0)^2)
//
// has the positive Wigner function
//
//   W(q, p) = (1/pi) exp(-(q-q0)^2/a - a [p - p0 - 2b(q-q0)]^2),
//
// which serves as the ontic density. Quadratic Hamiltonians move phase points
// along the exact affine symplectic flow of Hamilton's equations.
namespace onticlab::phase_space {

/// Parameters (q0, p0, a, b) of a Gaussian pure state; a > 0.
class GaussianStateParams {
 public:
  GaussianStateParams(double q0, double p0, double a, double b);

  double q0() const noexcept { return q0_; }
  double p0() const noexcept { return p0_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

 private:
  double q0_;
  double p0_;
  double a_;
  double b_;
};

struct PhasePoint {
  double q = 0.0;
  double p = 0.0;

  Eigen::Vector2d vector() const noexcept { return {q, p}; }
};

/// H(z) = z.A.z / 2 + c.z with z = (q, p) and symmetric A.
class QuadraticHamiltonian {
 public:
  QuadraticHamiltonian(const Eigen::Matrix2d& quadratic, const Eigen::Vector2d& linear);

  static QuadraticHamiltonian zero();
  /// (q^2 + p^2) omega / 2.
  static QuadraticHamiltonian harmonic(double omega = 1.0);
  /// p^2 / (2 m).
  static QuadraticHamiltonian free_particle(double mass = 1.0);

  const Eigen::Matrix2d& quadratic() const noexcept { return a_; }
  const Eigen::Vector2d& linear() const noexcept { return c_; }
  double energy(const PhasePoint& pt) const noexcept;

 private:
  Eigen::Matrix2d a_;
  Eigen::Vector2d c_;
};

/// Affine map z -> M z + d with det M = 1.
class SymplecticFlow {
 public:
  static SymplecticFlow identity();
  /// Time-t flow of z' = J (A z + c), J = [[0, 1], [-1, 0]], from the matrix
  /// exponential of the augmented generator [[J A, J c], [0, 0]].
  static SymplecticFlow generated_by(const QuadraticHamiltonian& h, double t);

  const Eigen::Matrix2d& linear() const noexcept { return m_; }
  const Eigen::Vector2d& shift() const noexcept { return d_; }

  PhasePoint apply(const PhasePoint& pt) const noexcept;
  /// This flow followed by `next`.
  SymplecticFlow then(const SymplecticFlow& next) const;

 private:
  SymplecticFlow(const Eigen::Matrix2d& m, const Eigen::Vector2d& d) : m_(m), d_(d) {}

  Eigen::Matrix2d m_;
  Eigen::Vector2d d_;
};

/// Mean and covariance of a Gaussian phase-space distribution.
struct GaussianMoments {
  Eigen::Vector2d mean;
  Eigen::Matrix2d covariance;
};

/// Var q = a/2, Cov(q, p) = a b, Var p = 2 a b^2 + 1/(2a).
GaussianMoments moments(const GaussianStateParams& g);
GaussianMoments push_forward(const GaussianMoments& m, const SymplecticFlow& flow);
/// Inverse of moments(); requires det(covariance) = 1/4 within 1e-9.
GaussianStateParams params_from_moments(const GaussianMoments& m);

double wigner_density(const PhasePoint& pt, const GaussianStateParams& g);

/// q = q0 + sqrt(a/2) xi1, p = p0 + 2b (q - q0) + xi2 / sqrt(2a).
PhasePoint sample(const GaussianStateParams& g, RandomStream& rng);

PhasePoint evolve(const PhasePoint& pt, const QuadraticHamiltonian& h, double t);
/// The pure Gaussian state whose Wigner function is the pushed-forward one.
GaussianStateParams evolve(const GaussianStateParams& g, const SymplecticFlow& flow);

/// cos(theta) q + sin(theta) p.
double quadrature(const PhasePoint& pt, double theta) noexcept;

/// (pi a)^{-1/2} exp(-(x - q0)^2 / a) = |psi(x)|^2.
double marginal_q_density(double x, const GaussianStateParams& g);

/// Normal law of the quadrature at angle theta under the Gaussian state.
struct NormalLaw {
  double mean;
  double variance;
};
NormalLaw quadrature_law(const GaussianStateParams& g, double theta);

/// p-integral of wigner_density at fixed q by Gauss-Legendre over +-12
/// conditional standard deviations; equals marginal_q_density(q, g).
double numeric_marginal_q_density(double q, const GaussianStateParams& g, int nodes = 96);

/// Test-input generators: q0, p0 ~ U(-2, 2), log a ~ U(log 0.25, log 4),
/// b ~ U(-1, 1); Hamiltonian entries ~ N(0, 1).
GaussianStateParams random_gaussian_params(RandomStream& rng);
QuadraticHamiltonian random_quadratic_hamiltonian(RandomStream& rng);

/// Event "the quadrature at angle theta lands in (lower, upper]".
struct QuadratureEvent {
  double theta = 0.0;
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
};

/// Gaussian Wigner model behind the common ontological-model contract. It
/// covers the four-parameter Gaussian manifold only, so it has no finite
/// Hilbert dimension.
class WignerGaussianModel {
 public:
  using Preparation = GaussianStateParams;
  using OnticState = PhasePoint;
  using Evolution = SymplecticFlow;
  using Event = QuadratureEvent;

  std::string name() const { return "wigner-gaussian"; }
  std::optional<int> hilbert_dimension() const noexcept { return std::nullopt; }
  int ontic_dimension() const noexcept { return 2; }
  bool dispersion_free() const noexcept { return true; }

  PhasePoint sample(const GaussianStateParams& g, RandomStream& rng) const;
  double density_or_support(const PhasePoint& pt, const GaussianStateParams& g) const;
  PhasePoint evolve(const PhasePoint& pt, const SymplecticFlow& flow) const;
  GaussianStateParams evolve_preparation(const GaussianStateParams& g,
                                         const SymplecticFlow& flow) const;
  SymplecticFlow compose(const SymplecticFlow& first, const SymplecticFlow& second) const;
  double event_probability(const PhasePoint& pt, const QuadratureEvent& event) const;
  double born_probability(const QuadratureEvent& event, const GaussianStateParams& g) const;
  double distance(const PhasePoint& a, const PhasePoint& b) const;
};

}  // namespace onticlab::phase_space
