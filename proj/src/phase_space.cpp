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

#include "onticlab/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "onticlab/quadrature.hpp"
#include "onticlab/statistics.hpp"

namespace onticlab::phase_space {
namespace {

const Eigen::Matrix2d kSymplecticForm = (Eigen::Matrix2d() << 0.0, 1.0, -1.0, 0.0).finished();

void require_positive_scale(double a) {
  if (!(a > 0.0)) {
    throw std::invalid_argument("Gaussian scale a must be positive");
  }
}

}  // namespace

GaussianStateParams::GaussianStateParams(double q0, double p0, double a, double b)
    : q0_(q0), p0_(p0), a_(a), b_(b) {
  if (!std::isfinite(q0) || !std::isfinite(p0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("Gaussian state parameters must be finite");
  }
  require_positive_scale(a);
}

QuadraticHamiltonian::QuadraticHamiltonian(const Eigen::Matrix2d& quadratic,
                                           const Eigen::Vector2d& linear)
    : a_(quadratic), c_(linear) {
  if (!quadratic.allFinite() || !linear.allFinite()) {
    throw std::invalid_argument("Hamiltonian coefficients must be finite");
  }
  if (std::abs(quadratic(0, 1) - quadratic(1, 0)) > 1e-12) {
    throw std::invalid_argument("quadratic form must be symmetric");
  }
}

QuadraticHamiltonian QuadraticHamiltonian::zero() {
  return {Eigen::Matrix2d::Zero(), Eigen::Vector2d::Zero()};
}

QuadraticHamiltonian QuadraticHamiltonian::harmonic(double omega) {
  return {omega * Eigen::Matrix2d::Identity(), Eigen::Vector2d::Zero()};
}

QuadraticHamiltonian QuadraticHamiltonian::free_particle(double mass) {
  if (!(mass > 0.0)) {
    throw std::invalid_argument("mass must be positive");
  }
  Eigen::Matrix2d a = Eigen::Matrix2d::Zero();
  a(1, 1) = 1.0 / mass;
  return {a, Eigen::Vector2d::Zero()};
}

double QuadraticHamiltonian::energy(const PhasePoint& pt) const noexcept {
  const Eigen::Vector2d z = pt.vector();
  return 0.5 * z.dot(a_ * z) + c_.dot(z);
}

SymplecticFlow SymplecticFlow::identity() {
  return {Eigen::Matrix2d::Identity(), Eigen::Vector2d::Zero()};
}

SymplecticFlow SymplecticFlow::generated_by(const QuadraticHamiltonian& h, double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("evolution time must be finite");
  }
  Eigen::Matrix3d generator = Eigen::Matrix3d::Zero();
  generator.topLeftCorner<2, 2>() = kSymplecticForm * h.quadratic() * t;
  generator.topRightCorner<2, 1>() = kSymplecticForm * h.linear() * t;
  const Eigen::Matrix3d flow = generator.exp();
  return {flow.topLeftCorner<2, 2>(), flow.topRightCorner<2, 1>()};
}

PhasePoint SymplecticFlow::apply(const PhasePoint& pt) const noexcept {
  const Eigen::Vector2d z = m_ * pt.vector() + d_;
  return {z(0), z(1)};
}

SymplecticFlow SymplecticFlow::then(const SymplecticFlow& next) const {
  return {next.m_ * m_, next.m_ * d_ + next.d_};
}

GaussianMoments moments(const GaussianStateParams& g) {
  const double a = g.a();
  const double b = g.b();
  GaussianMoments m;
  m.mean = {g.q0(), g.p0()};
  m.covariance << a / 2.0, a * b, a * b, 2.0 * a * b * b + 1.0 / (2.0 * a);
  return m;
}

GaussianMoments push_forward(const GaussianMoments& m, const SymplecticFlow& flow) {
  return {flow.linear() * m.mean + flow.shift(),
          flow.linear() * m.covariance * flow.linear().transpose()};
}

GaussianStateParams params_from_moments(const GaussianMoments& m) {
  if (std::abs(m.covariance.determinant() - 0.25) > 1e-9) {
    throw std::invalid_argument("covariance does not describe a pure Gaussian state");
  }
  const double a = 2.0 * m.covariance(0, 0);
  require_positive_scale(a);
  return {m.mean(0), m.mean(1), a, m.covariance(0, 1) / a};
}

double wigner_density(const PhasePoint& pt, const GaussianStateParams& g) {
  const double dq = pt.q - g.q0();
  const double shear = pt.p - g.p0() - 2.0 * g.b() * dq;
  return std::exp(-dq * dq / g.a() - g.a() * shear * shear) / std::numbers::pi;
}

PhasePoint sample(const GaussianStateParams& g, RandomStream& rng) {
  const double xi1 = rng.normal();
  const double xi2 = rng.normal();
  const double dq = std::sqrt(g.a() / 2.0) * xi1;
  return {g.q0() + dq, g.p0() + 2.0 * g.b() * dq + xi2 / std::sqrt(2.0 * g.a())};
}

PhasePoint evolve(const PhasePoint& pt, const QuadraticHamiltonian& h, double t) {
  return SymplecticFlow::generated_by(h, t).apply(pt);
}

GaussianStateParams evolve(const GaussianStateParams& g, const SymplecticFlow& flow) {
  return params_from_moments(push_forward(moments(g), flow));
}

double quadrature(const PhasePoint& pt, double theta) noexcept {
  return std::cos(theta) * pt.q + std::sin(theta) * pt.p;
}

double marginal_q_density(double x, const GaussianStateParams& g) {
  const double dq = x - g.q0();
  return std::exp(-dq * dq / g.a()) / std::sqrt(std::numbers::pi * g.a());
}

NormalLaw quadrature_law(const GaussianStateParams& g, double theta) {
  const GaussianMoments m = moments(g);
  const Eigen::Vector2d dir(std::cos(theta), std::sin(theta));
  return {dir.dot(m.mean), dir.dot(m.covariance * dir)};
}

double numeric_marginal_q_density(double q, const GaussianStateParams& g, int nodes) {
  const double center = g.p0() + 2.0 * g.b() * (q - g.q0());
  const double width = 12.0 / std::sqrt(2.0 * g.a());
  const QuadratureRule rule = gauss_legendre(nodes, center - width, center + width);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    total += rule.weights[i] * wigner_density({q, rule.nodes[i]}, g);
  }
  return total;
}

GaussianStateParams random_gaussian_params(RandomStream& rng) {
  const double q0 = 4.0 * rng.uniform() - 2.0;
  const double p0 = 4.0 * rng.uniform() - 2.0;
  const double a = std::exp(std::log(0.25) + rng.uniform() * std::log(16.0));
  const double b = 2.0 * rng.uniform() - 1.0;
  return {q0, p0, a, b};
}

QuadraticHamiltonian random_quadratic_hamiltonian(RandomStream& rng) {
  const double a00 = rng.normal();
  const double a01 = rng.normal();
  const double a11 = rng.normal();
  const double c0 = rng.normal();
  const double c1 = rng.normal();
  return {(Eigen::Matrix2d() << a00, a01, a01, a11).finished(), Eigen::Vector2d(c0, c1)};
}

PhasePoint WignerGaussianModel::sample(const GaussianStateParams& g, RandomStream& rng) const {
  return phase_space::sample(g, rng);
}

double WignerGaussianModel::density_or_support(const PhasePoint& pt,
                                               const GaussianStateParams& g) const {
  return wigner_density(pt, g);
}

PhasePoint WignerGaussianModel::evolve(const PhasePoint& pt, const SymplecticFlow& flow) const {
  return flow.apply(pt);
}

GaussianStateParams WignerGaussianModel::evolve_preparation(const GaussianStateParams& g,
                                                            const SymplecticFlow& flow) const {
  return phase_space::evolve(g, flow);
}

SymplecticFlow WignerGaussianModel::compose(const SymplecticFlow& first,
                                            const SymplecticFlow& second) const {
  return first.then(second);
}

double WignerGaussianModel::event_probability(const PhasePoint& pt,
                                              const QuadratureEvent& event) const {
  const double x = quadrature(pt, event.theta);
  return (x > event.lower && x <= event.upper) ? 1.0 : 0.0;
}

double WignerGaussianModel::born_probability(const QuadratureEvent& event,
                                             const GaussianStateParams& g) const {
  const NormalLaw law = quadrature_law(g, event.theta);
  const auto cdf = [&](double x) {
    if (x == -std::numeric_limits<double>::infinity()) return 0.0;
    if (x == std::numeric_limits<double>::infinity()) return 1.0;
    return normal_cdf(x, law.mean, law.variance);
  };
  return std::max(0.0, cdf(event.upper) - cdf(event.lower));
}

double WignerGaussianModel::distance(const PhasePoint& a, const PhasePoint& b) const {
  return std::hypot(a.q - b.q, a.p - b.p);
}

}  // namespace onticlab::phase_space
