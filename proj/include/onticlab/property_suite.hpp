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

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "onticlab/hilbert.hpp"
#include "onticlab/qubit_model.hpp"
#include "onticlab/random.hpp"
#include "onticlab/statistics.hpp"

namespace onticlab {

/// Densities above this value count as "in support".
inline constexpr double kSupportThreshold = 1e-12;
/// Two-sided z-score acceptance threshold for Monte Carlo checks.
inline constexpr double kZThreshold = 4.0;

/// A preparation density rho(X | psi), an evolution kernel and a measurement
/// kernel P(event | X) over a common ontic space. Context sets are singletons:
/// each model has one preparation, one evolution and one measurement rule.
template <typename M>
concept OntologicalModel = requires(const M& model, const typename M::Preparation& prep,
                                    const typename M::OnticState& x,
                                    const typename M::Evolution& u,
                                    const typename M::Event& event, RandomStream& rng) {
  typename M::Preparation;
  typename M::OnticState;
  typename M::Evolution;
  typename M::Event;
  { model.name() } -> std::convertible_to<std::string>;
  { model.hilbert_dimension() } -> std::same_as<std::optional<int>>;
  { model.ontic_dimension() } -> std::convertible_to<int>;
  { model.dispersion_free() } -> std::convertible_to<bool>;
  { model.sample(prep, rng) } -> std::same_as<typename M::OnticState>;
  { model.density_or_support(x, prep) } -> std::convertible_to<double>;
  { model.evolve(x, u) } -> std::same_as<typename M::OnticState>;
  { model.evolve_preparation(prep, u) } -> std::same_as<typename M::Preparation>;
  { model.compose(u, u) } -> std::same_as<typename M::Evolution>;
  { model.event_probability(x, event) } -> std::convertible_to<double>;
  { model.born_probability(event, prep) } -> std::convertible_to<double>;
  { model.distance(x, x) } -> std::convertible_to<double>;
};

/// A model whose preparations are Hilbert-space vectors.
template <typename M>
concept HilbertOntologicalModel =
    OntologicalModel<M> && std::same_as<typename M::Preparation, QuantumState>;

/// Outcome of a Monte Carlo Born-rule comparison.
struct BornTestReport {
  std::string model;
  double estimate = 0.0;
  double exact = 0.0;
  std::int64_t n = 0;
  double z_score = 0.0;
  std::uint64_t seed = 0;

  bool passed(double threshold = kZThreshold) const noexcept {
    return std::abs(z_score) < threshold;
  }
};

/// Outcome of a support-membership scan.
struct SupportOverlapReport {
  std::string model;
  std::int64_t n_samples = 0;
  std::int64_t overlap_count = 0;
  double max_foreign_density = 0.0;
  std::uint64_t seed = 0;
};

/// Simulates the measurement of `event` on n ontic states drawn from
/// rho(. | prep): each draw fires with probability event_probability (a
/// Bernoulli draw for non-dispersion-free kernels) and the frequency is
/// compared with the quantum prediction.
template <OntologicalModel M>
BornTestReport check_born_rule(const M& model, const typename M::Preparation& prep,
                               const typename M::Event& event, std::int64_t n,
                               RandomStream& rng) {
  if (n < 1000) {
    throw std::invalid_argument("Born-rule check needs at least 1000 samples");
  }
  RunningMoments outcomes;
  for (std::int64_t i = 0; i < n; ++i) {
    const auto x = model.sample(prep, rng);
    const double p = model.event_probability(x, event);
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::logic_error(model.name() + ": event probability outside [0, 1]");
    }
    double fired = p;
    if (p > 0.0 && p < 1.0) fired = rng.uniform() < p ? 1.0 : 0.0;
    outcomes.add(fired);
  }
  BornTestReport report;
  report.model = model.name();
  report.estimate = outcomes.mean();
  report.exact = model.born_probability(event, prep);
  report.n = n;
  report.z_score = z_score(report.estimate, report.exact, outcomes.variance(), n);
  report.seed = rng.seed();
  return report;
}

/// Samples rho(. | psi) and counts samples that also lie in the support of
/// the orthogonal state psi_perp.
template <HilbertOntologicalModel M>
SupportOverlapReport check_property3(const M& model, const QuantumState& psi,
                                     const QuantumState& psi_perp, std::int64_t n,
                                     RandomStream& rng) {
  if (std::abs(inner(psi, psi_perp)) > 1e-10) {
    throw std::invalid_argument("disjointness check requires orthogonal states");
  }
  SupportOverlapReport report;
  report.model = model.name();
  report.n_samples = n;
  report.seed = rng.seed();
  for (std::int64_t i = 0; i < n; ++i) {
    const auto x = model.sample(psi, rng);
    const double foreign = model.density_or_support(x, psi_perp);
    report.max_foreign_density = std::max(report.max_foreign_density, foreign);
    if (foreign > kSupportThreshold) ++report.overlap_count;
  }
  return report;
}

/// Samples rho(. | prep), evolves every sample and counts those that leave the
/// support of the evolved preparation. max_foreign_density records the largest
/// density of a violating sample.
template <OntologicalModel M>
SupportOverlapReport check_property1_flow(const M& model, const typename M::Preparation& prep,
                                          const typename M::Evolution& u, std::int64_t n,
                                          RandomStream& rng) {
  const auto evolved_prep = model.evolve_preparation(prep, u);
  SupportOverlapReport report;
  report.model = model.name();
  report.n_samples = n;
  report.seed = rng.seed();
  for (std::int64_t i = 0; i < n; ++i) {
    const auto x = model.evolve(model.sample(prep, rng), u);
    const double d = model.density_or_support(x, evolved_prep);
    if (!(d > kSupportThreshold)) {
      ++report.overlap_count;
      report.max_foreign_density = std::max(report.max_foreign_density, d);
    }
  }
  return report;
}

/// Largest distance between evolving in two steps and evolving once by the
/// composed evolution, over n samples.
template <OntologicalModel M>
double check_composition(const M& model, const typename M::Preparation& prep,
                         const typename M::Evolution& first,
                         const typename M::Evolution& second, std::int64_t n,
                         RandomStream& rng) {
  const auto both = model.compose(first, second);
  double worst = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    const auto x = model.sample(prep, rng);
    const auto stepwise = model.evolve(model.evolve(x, first), second);
    worst = std::max(worst, model.distance(stepwise, model.evolve(x, both)));
  }
  return worst;
}

/// Largest |sum_k P(event_k | X) - 1| over n samples, for events forming a
/// complete set of mutually exclusive outcomes.
template <OntologicalModel M>
double check_exclusivity(const M& model, const typename M::Preparation& prep,
                         std::span<const typename M::Event> complete_set, std::int64_t n,
                         RandomStream& rng) {
  double worst = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    const auto x = model.sample(prep, rng);
    double total = 0.0;
    for (const auto& event : complete_set) {
      total += model.event_probability(x, event);
    }
    worst = std::max(worst, std::abs(total - 1.0));
  }
  return worst;
}

/// Positive-but-not-ontological control: the spin Husimi function
/// Q(v | psi) = (1 + v . w(psi)) / (4 pi) used as if it were a preparation
/// density. Its supports for orthogonal states overlap everywhere except at
/// two points.
class HusimiQubitPseudoModel {
 public:
  using Preparation = QuantumState;
  using OnticState = qubit::OnticDirection;
  using Evolution = UnitaryOp;
  using Event = QuantumState;

  std::string name() const { return "husimi-q"; }
  std::optional<int> hilbert_dimension() const noexcept { return 2; }
  int ontic_dimension() const noexcept { return 2; }
  bool dispersion_free() const noexcept { return false; }

  qubit::OnticDirection sample(const QuantumState& psi, RandomStream& rng) const;
  double density_or_support(const qubit::OnticDirection& v, const QuantumState& psi) const;
  qubit::OnticDirection evolve(const qubit::OnticDirection& v, const UnitaryOp& u) const;
  QuantumState evolve_preparation(const QuantumState& psi, const UnitaryOp& u) const;
  UnitaryOp compose(const UnitaryOp& first, const UnitaryOp& second) const;
  /// (1 + w(phi) . v) / 2. Averaged against Q this gives 1/2 + w(phi).w(psi)/6,
  /// not the Born rule.
  double event_probability(const qubit::OnticDirection& v, const QuantumState& phi) const;
  double born_probability(const QuantumState& phi, const QuantumState& psi) const;
  double distance(const qubit::OnticDirection& a, const qubit::OnticDirection& b) const;
};

/// Husimi density of a qubit state on the sphere.
double husimi_density(const qubit::OnticDirection& v, const QuantumState& psi);

/// Evaluates Q(. | psi) and Q(. | psi_perp) on the nodes of the default
/// sphere grid: n_samples counts the nodes in the support of Q(. | psi),
/// overlap_count those also in the support of Q(. | psi_perp), and
/// max_foreign_density is the largest Q(v | psi_perp) on the shared nodes.
SupportOverlapReport q_function_counterexample(const QuantumState& psi,
                                               const QuantumState& psi_perp);

/// Smallest number of continuous ontic variables of a Markovian ontological
/// model of an N-dimensional system: 2N - 2.
int min_ontic_dimension(int dimension);

struct DimensionAudit {
  std::string model;
  std::optional<int> hilbert_dimension;
  int ontic_dimension = 0;
  /// 2N - 2, absent for models restricted to a submanifold of states.
  std::optional<int> bound;
  bool satisfies = false;
  /// Set for models that reproduce only a restricted family of states and
  /// measurements; the bound does not apply to them.
  bool restricted_manifold = false;
};

DimensionAudit audit_dimension(std::string model, std::optional<int> hilbert_dimension,
                               int ontic_dimension);

template <OntologicalModel M>
DimensionAudit audit_dimension(const M& model) {
  return audit_dimension(model.name(), model.hilbert_dimension(), model.ontic_dimension());
}

}  // namespace onticlab
