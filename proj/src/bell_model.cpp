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

#include "onticlab/bell_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "onticlab/errors.hpp"

namespace onticlab::bell {
namespace {

constexpr double kOrthonormalTolerance = 1e-10;
constexpr double kCumulativeSlack = 1e-12;

void require_same_dimension(int a, int b) {
  if (a != b) {
    throw DimensionMismatch("incompatible Hilbert spaces: dimension " + std::to_string(a) +
                            " vs " + std::to_string(b));
  }
}

void require_permutation(std::span<const int> ordering, int n) {
  if (static_cast<int>(ordering.size()) != n) {
    throw std::invalid_argument("ordering must list every basis label exactly once");
  }
  std::vector<bool> seen(n, false);
  for (const int label : ordering) {
    if (label < 1 || label > n || seen[label - 1]) {
      throw std::invalid_argument("ordering must be a permutation of 1..N");
    }
    seen[label - 1] = true;
  }
}

// Slot of the fired vector for a given set of cumulative weights.
int fired_slot(const std::vector<double>& cumulative, double lambda) {
  for (std::size_t k = 0; k < cumulative.size(); ++k) {
    if (cumulative[k] > 0.0 && lambda <= cumulative[k]) {
      return static_cast<int>(k) + 1;
    }
  }
  if (lambda <= cumulative.back() + kCumulativeSlack) {
    // Rounding left C_N a hair below lambda; the last nonempty cell fires.
    for (std::size_t k = cumulative.size(); k-- > 0;) {
      const double lower = k == 0 ? 0.0 : cumulative[k - 1];
      if (cumulative[k] > lower) return static_cast<int>(k) + 1;
    }
  }
  throw ConsistencyError("lambda = " + std::to_string(lambda) +
                         " exceeds the total weight of the context");
}

}  // namespace

BellOnticState::BellOnticState(QuantumState chi, double lambda)
    : chi_(std::move(chi)), lambda_(lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("lambda must lie in [0, 1]");
  }
}

MeasurementContext::MeasurementContext(std::vector<QuantumState> basis)
    : basis_(std::move(basis)) {
  const int n = static_cast<int>(basis_.size());
  if (n < 2) {
    throw std::invalid_argument("a measurement context needs at least two vectors");
  }
  for (int i = 0; i < n; ++i) {
    require_same_dimension(basis_[i].dimension(), n);
    for (int j = i; j < n; ++j) {
      const Complex overlap = inner(basis_[i], basis_[j]);
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(overlap - expected) > kOrthonormalTolerance) {
        throw std::invalid_argument("measurement context is not orthonormal");
      }
    }
  }
}

MeasurementContext MeasurementContext::standard(int dimension) {
  std::vector<QuantumState> basis;
  basis.reserve(dimension);
  for (int k = 0; k < dimension; ++k) {
    basis.push_back(QuantumState::basis(dimension, k));
  }
  return MeasurementContext(std::move(basis));
}

MeasurementContext MeasurementContext::from_unitary(const UnitaryOp& u) {
  std::vector<QuantumState> basis;
  basis.reserve(u.dimension());
  for (int k = 0; k < u.dimension(); ++k) {
    basis.push_back(QuantumState::normalized(u.matrix().col(k)));
  }
  return MeasurementContext(std::move(basis));
}

const QuantumState& MeasurementContext::vector(int label) const {
  if (label < 1 || label > dimension()) {
    throw std::out_of_range("basis label out of range");
  }
  return basis_[label - 1];
}

MeasurementContext MeasurementContext::permuted(std::span<const int> ordering) const {
  require_permutation(ordering, dimension());
  std::vector<QuantumState> basis;
  basis.reserve(ordering.size());
  for (const int label : ordering) {
    basis.push_back(basis_[label - 1]);
  }
  return MeasurementContext(std::move(basis));
}

MeasurementContext MeasurementContext::evolved(const UnitaryOp& u) const {
  std::vector<QuantumState> basis;
  basis.reserve(basis_.size());
  for (const auto& phi : basis_) {
    basis.push_back(evolve_state(phi, u));
  }
  return MeasurementContext(std::move(basis));
}

std::vector<double> cumulative_weights(const QuantumState& chi, const MeasurementContext& ctx) {
  require_same_dimension(chi.dimension(), ctx.dimension());
  std::vector<double> cumulative(ctx.dimension());
  double running = 0.0;
  for (int k = 0; k < ctx.dimension(); ++k) {
    running += born_probability(ctx.basis()[k], chi);
    cumulative[k] = running;
  }
  return cumulative;
}

BellOnticState sample(const QuantumState& psi, RandomStream& rng) {
  return BellOnticState(psi, rng.uniform());
}

BellOnticState evolve(const BellOnticState& x, const UnitaryOp& u) {
  return BellOnticState(evolve_state(x.chi(), u), x.lambda());
}

int measure(const BellOnticState& x, const MeasurementContext& ctx) {
  return fired_slot(cumulative_weights(x.chi(), ctx), x.lambda());
}

OrderingComparison compare_orderings(const QuantumState& chi, const MeasurementContext& ctx,
                                     std::span<const int> ordering, double lambda) {
  const MeasurementContext reordered = ctx.permuted(ordering);
  const int original = fired_slot(cumulative_weights(chi, ctx), lambda);
  const int slot = fired_slot(cumulative_weights(chi, reordered), lambda);
  return {original, ordering[slot - 1], lambda};
}

std::optional<OrderingComparison> contextuality_witness(const QuantumState& chi,
                                                        const MeasurementContext& ctx,
                                                        std::span<const int> ordering,
                                                        int grid_points) {
  if (grid_points < 1) {
    throw std::invalid_argument("lambda grid needs at least one point");
  }
  const MeasurementContext reordered = ctx.permuted(ordering);
  const std::vector<double> original = cumulative_weights(chi, ctx);
  const std::vector<double> permuted = cumulative_weights(chi, reordered);
  for (int i = 0; i < grid_points; ++i) {
    const double lambda = (i + 0.5) / grid_points;
    const int a = fired_slot(original, lambda);
    const int b = ordering[fired_slot(permuted, lambda) - 1];
    if (a != b) return OrderingComparison{a, b, lambda};
  }
  return std::nullopt;
}

bool measure_ndf(const QuantumState& chi, const QuantumState& phi, RandomStream& rng) {
  const double p = born_probability(phi, chi);
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return rng.uniform() < p;
}

DispersionFreeModel::DispersionFreeModel(int dimension) : dimension_(dimension) {
  if (dimension < 2) {
    throw std::invalid_argument("Bell model requires N >= 2");
  }
}

BellOnticState DispersionFreeModel::sample(const QuantumState& psi, RandomStream& rng) const {
  require_same_dimension(psi.dimension(), dimension_);
  return bell::sample(psi, rng);
}

double DispersionFreeModel::density_or_support(const BellOnticState& x,
                                               const QuantumState& psi) const {
  return same_ray(x.chi(), psi) ? 1.0 : 0.0;
}

BellOnticState DispersionFreeModel::evolve(const BellOnticState& x, const UnitaryOp& u) const {
  return bell::evolve(x, u);
}

QuantumState DispersionFreeModel::evolve_preparation(const QuantumState& psi,
                                                     const UnitaryOp& u) const {
  return evolve_state(psi, u);
}

UnitaryOp DispersionFreeModel::compose(const UnitaryOp& first, const UnitaryOp& second) const {
  return second * first;
}

double DispersionFreeModel::event_probability(const BellOnticState& x,
                                              const ContextEvent& event) const {
  return measure(x, event.context) == event.outcome ? 1.0 : 0.0;
}

double DispersionFreeModel::born_probability(const ContextEvent& event,
                                             const QuantumState& psi) const {
  return onticlab::born_probability(event.context.vector(event.outcome), psi);
}

double DispersionFreeModel::distance(const BellOnticState& a, const BellOnticState& b) const {
  require_same_dimension(a.dimension(), b.dimension());
  return (a.chi().amplitudes() - b.chi().amplitudes()).norm() +
         std::abs(a.lambda() - b.lambda());
}

TrivialModel::TrivialModel(int dimension) : dimension_(dimension) {
  if (dimension < 2) {
    throw std::invalid_argument("Bell model requires N >= 2");
  }
}

QuantumState TrivialModel::sample(const QuantumState& psi, RandomStream&) const {
  require_same_dimension(psi.dimension(), dimension_);
  return psi;
}

double TrivialModel::density_or_support(const QuantumState& chi, const QuantumState& psi) const {
  return same_ray(chi, psi) ? 1.0 : 0.0;
}

QuantumState TrivialModel::evolve(const QuantumState& chi, const UnitaryOp& u) const {
  return evolve_state(chi, u);
}

QuantumState TrivialModel::evolve_preparation(const QuantumState& psi, const UnitaryOp& u) const {
  return evolve_state(psi, u);
}

UnitaryOp TrivialModel::compose(const UnitaryOp& first, const UnitaryOp& second) const {
  return second * first;
}

double TrivialModel::event_probability(const QuantumState& chi, const QuantumState& phi) const {
  return onticlab::born_probability(phi, chi);
}

double TrivialModel::born_probability(const QuantumState& phi, const QuantumState& psi) const {
  return onticlab::born_probability(phi, psi);
}

double TrivialModel::distance(const QuantumState& a, const QuantumState& b) const {
  require_same_dimension(a.dimension(), b.dimension());
  return (a.amplitudes() - b.amplitudes()).norm();
}

}  // namespace onticlab::bell
