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
#include <functional>
#include <numbers>

#include "onticlab/phase_space.hpp"
#include "onticlab/random.hpp"
#include "oracles.hpp"

namespace onticlab::phase_space {
namespace {

constexpr double pi = std::numbers::pi;

// Integral of f against the Wigner density, by tensor Gauss-Hermite in the
// coordinates that diagonalize the exponent.
double wigner_expectation(const GaussianStateParams& g,
                          const std::function<double(double, double)>& f) {
  const auto [x, w] = oracle::gauss_hermite(40);
  const double ra = std::sqrt(g.a());
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double q = g.q0() + ra * x[i];
      const double p = g.p0() + 2.0 * g.b() * (q - g.q0()) + x[j] / ra;
      total += w[i] * w[j] * f(q, p);
    }
  }
  return total / pi;
}

// Trapezoid rule in p over +-40 widths; converges geometrically for Gaussians.
double marginal_by_trapezoid(double q, const GaussianStateParams& g) {
  const double center = g.p0() + 2.0 * g.b() * (q - g.q0());
  const double half = 40.0 / std::sqrt(g.a());
  const int n = 4000;
  const double h = 2.0 * half / n;
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double p = center - half + k * h;
    sum += (k == 0 || k == n ? 0.5 : 1.0) * wigner_density({q, p}, g);
  }
  return sum * h;
}

TEST(Params, Validation) {
  EXPECT_THROW(GaussianStateParams(0, 0, 0.0, 0), std::invalid_argument);
  EXPECT_THROW(GaussianStateParams(0, 0, -1.0, 0), std::invalid_argument);
  EXPECT_THROW(GaussianStateParams(std::nan(""), 0, 1.0, 0), std::invalid_argument);
  Eigen::Matrix2d a;
  a << 1.0, 0.5, 0.2, 1.0;
  EXPECT_THROW(QuadraticHamiltonian(a, Eigen::Vector2d::Zero()), std::invalid_argument);
}

TEST(Wigner, NormalizationAndMoments) {
  RandomStream rng(3);
  for (int i = 0; i < 5; ++i) {
    const GaussianStateParams g = random_gaussian_params(rng);
    const GaussianMoments m = moments(g);
    EXPECT_NEAR(wigner_expectation(g, [](double, double) { return 1.0; }), 1.0, 1e-12);
    const double mq = wigner_expectation(g, [](double q, double) { return q; });
    const double mp = wigner_expectation(g, [](double, double p) { return p; });
    EXPECT_NEAR(mq, m.mean(0), 1e-10);
    EXPECT_NEAR(mp, m.mean(1), 1e-10);
    EXPECT_NEAR(wigner_expectation(g, [&](double q, double) { return (q - mq) * (q - mq); }),
                m.covariance(0, 0), 1e-10);
    EXPECT_NEAR(wigner_expectation(g, [&](double q, double p) { return (q - mq) * (p - mp); }),
                m.covariance(0, 1), 1e-10);
    EXPECT_NEAR(wigner_expectation(g, [&](double, double p) { return (p - mp) * (p - mp); }),
                m.covariance(1, 1), 1e-10);
    EXPECT_NEAR(m.covariance.determinant(), 0.25, 1e-12);
    const GaussianStateParams back = params_from_moments(m);
    EXPECT_NEAR(back.a(), g.a(), 1e-12);
    EXPECT_NEAR(back.b(), g.b(), 1e-12);
  }
}

TEST(Wigner, MarginalMatchesTrapezoid) {
  RandomStream rng(5);
  for (int i = 0; i < 5; ++i) {
    const GaussianStateParams g = random_gaussian_params(rng);
    for (const double dq : {-2.0, -0.3, 0.0, 0.7, 1.9}) {
      const double q = g.q0() + dq * std::sqrt(g.a());
      const double reference = marginal_by_trapezoid(q, g);
      EXPECT_NEAR(marginal_q_density(q, g), reference, 1e-12);
      EXPECT_NEAR(numeric_marginal_q_density(q, g), reference, 1e-12);
    }
  }
}

TEST(Wigner, QuadratureLawMatchesMoments) {
  const GaussianStateParams g(0.4, -1.1, 0.7, 0.3);
  for (const double theta : {0.0, pi / 4.0, pi / 2.0, 2.0}) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double mean = wigner_expectation(g, [&](double q, double p) { return c * q + s * p; });
    const double var = wigner_expectation(
        g, [&](double q, double p) { return std::pow(c * q + s * p - mean, 2); });
    const NormalLaw law = quadrature_law(g, theta);
    EXPECT_NEAR(law.mean, mean, 1e-10);
    EXPECT_NEAR(law.variance, var, 1e-10);
  }
}

TEST(Sampling, EmpiricalMoments) {
  const GaussianStateParams g(1.0, -0.5, 0.8, 0.4);
  const GaussianMoments m = moments(g);
  RandomStream rng(77);
  const int n = 200000;
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  Eigen::Matrix2d second = Eigen::Matrix2d::Zero();
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector2d z = sample(g, rng).vector();
    mean += z;
    second += z * z.transpose();
  }
  mean /= n;
  const Eigen::Matrix2d cov = second / n - mean * mean.transpose();
  EXPECT_LT((mean - m.mean).norm(), 0.01);
  EXPECT_LT((cov - m.covariance).norm(), 0.02);
}

TEST(Flow, MatchesIntegratedHamiltonEquations) {
  RandomStream rng(19);
  for (int i = 0; i < 10; ++i) {
    const QuadraticHamiltonian h = random_quadratic_hamiltonian(rng);
    const double t = 3.0 * rng.uniform() - 1.5;
    const PhasePoint start{rng.normal(), rng.normal()};
    const Eigen::Vector2d reference =
        oracle::hamilton_rk4(h.quadratic(), h.linear(), start.vector(), t);
    EXPECT_LT((evolve(start, h, t).vector() - reference).norm(), 1e-9);
    const SymplecticFlow flow = SymplecticFlow::generated_by(h, t);
    EXPECT_NEAR(flow.linear().determinant(), 1.0, 1e-12);
    EXPECT_NEAR(h.energy(flow.apply(start)), h.energy(start), 1e-9);
  }
}

TEST(Flow, ClosedFormsAndComposition) {
  const PhasePoint z{0.3, -1.2};
  const PhasePoint quarter = evolve(z, QuadraticHamiltonian::harmonic(), pi / 2.0);
  EXPECT_NEAR(quarter.q, z.p, 1e-14);
  EXPECT_NEAR(quarter.p, -z.q, 1e-14);
  const PhasePoint drift = evolve(z, QuadraticHamiltonian::free_particle(2.0), 1.5);
  EXPECT_NEAR(drift.q, z.q + z.p * 1.5 / 2.0, 1e-14);
  EXPECT_NEAR(drift.p, z.p, 1e-14);

  RandomStream rng(8);
  const QuadraticHamiltonian h = random_quadratic_hamiltonian(rng);
  const SymplecticFlow joined =
      SymplecticFlow::generated_by(h, 0.4).then(SymplecticFlow::generated_by(h, 0.9));
  const SymplecticFlow direct = SymplecticFlow::generated_by(h, 1.3);
  EXPECT_LT((joined.linear() - direct.linear()).norm(), 1e-12);
  EXPECT_LT((joined.shift() - direct.shift()).norm(), 1e-12);
}

TEST(Flow, LiouvilleTransportOfTheDensity) {
  RandomStream rng(44);
  for (int i = 0; i < 5; ++i) {
    const GaussianStateParams g = random_gaussian_params(rng);
    const SymplecticFlow flow =
        SymplecticFlow::generated_by(random_quadratic_hamiltonian(rng), rng.uniform());
    const GaussianStateParams moved = evolve(g, flow);
    for (int k = 0; k < 5; ++k) {
      const PhasePoint z{g.q0() + rng.normal(), g.p0() + rng.normal()};
      EXPECT_NEAR(wigner_density(flow.apply(z), moved), wigner_density(z, g), 1e-12);
    }
  }
}

TEST(Model, QuadratureEventProbability) {
  const WignerGaussianModel model;
  const GaussianStateParams g(0.2, 0.1, 1.3, -0.2);
  const QuadratureEvent event{pi / 3.0, -0.5, 0.8};
  const double exact = model.born_probability(event, g);
  RandomStream rng(90);
  const int n = 200000;
  int hits = 0;
  for (int i = 0; i < n; ++i) hits += model.event_probability(model.sample(g, rng), event) > 0.5;
  EXPECT_LT(std::abs(hits / static_cast<double>(n) - exact),
            4.0 * std::sqrt(exact * (1 - exact) / n));
  EXPECT_FALSE(model.hilbert_dimension().has_value());
}

}  // namespace
}  // namespace onticlab::phase_space
