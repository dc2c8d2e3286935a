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
#include <vector>

#include "onticlab/hilbert.hpp"
#include "onticlab/random.hpp"

// Bell's dispersion-free model of an N-dimensional system. The ontic state is
// (chi, lambda): chi is a copy of the prepared state vector and lambda is
// uniform on [0, 1]. chi follows the Schroedinger equation and lambda is a
// constant of motion. Measuring an ordered orthonormal basis
// (phi(1), ..., phi(N)) yields the unique k with C_{k-1} < lambda <= C_k,
// where C_k = sum_{j<=k} |<chi|phi(j)>|^2.
//
// Outcomes and basis labels are 1-based throughout this header.
namespace onticlab::bell {

/// Ontic state (chi, lambda) with unit-norm chi and lambda in [0, 1].
class BellOnticState {
 public:
  BellOnticState(QuantumState chi, double lambda);

  const QuantumState& chi() const noexcept { return chi_; }
  double lambda() const noexcept { return lambda_; }
  int dimension() const noexcept { return chi_.dimension(); }

 private:
  QuantumState chi_;
  double lambda_;
};

/// Ordered orthonormal basis. The order is part of the context.
class MeasurementContext {
 public:
  /// Throws std::invalid_argument unless the N vectors are orthonormal within
  /// 1e-10 and N equals their dimension.
  explicit MeasurementContext(std::vector<QuantumState> basis);

  /// (|1>, ..., |N>).
  static MeasurementContext standard(int dimension);
  /// The columns of u, in order.
  static MeasurementContext from_unitary(const UnitaryOp& u);

  int dimension() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<QuantumState>& basis() const noexcept { return basis_; }
  /// phi(label), label in 1..N.
  const QuantumState& vector(int label) const;

  /// Reordered context: slot i holds phi(ordering[i]). `ordering` must be a
  /// permutation of 1..N.
  MeasurementContext permuted(std::span<const int> ordering) const;
  /// Applies u to every basis vector.
  MeasurementContext evolved(const UnitaryOp& u) const;

 private:
  std::vector<QuantumState> basis_;
};

/// Cumulative weights (C_1, ..., C_N).
std::vector<double> cumulative_weights(const QuantumState& chi, const MeasurementContext& ctx);

/// chi = psi, lambda ~ U[0, 1).
BellOnticState sample(const QuantumState& psi, RandomStream& rng);

/// (U chi, lambda).
BellOnticState evolve(const BellOnticState& x, const UnitaryOp& u);

/// Outcome slot k in 1..N with C_{k-1} < lambda <= C_k. lambda = 0 selects the
/// first slot with nonzero weight. Throws ConsistencyError if lambda exceeds
/// C_N by more than 1e-12.
int measure(const BellOnticState& x, const MeasurementContext& ctx);

/// Outcomes of one ontic state under two orderings of the same basis. Both
/// outcomes are labels of the fired vector in the ORIGINAL context.
struct OrderingComparison {
  int outcome_original;
  int outcome_permuted;
  double lambda;

  bool differs() const noexcept { return outcome_original != outcome_permuted; }
};

OrderingComparison compare_orderings(const QuantumState& chi, const MeasurementContext& ctx,
                                     std::span<const int> ordering, double lambda);

/// Scans lambda on the midpoints of a uniform grid and returns the first value
/// at which the fired vector depends on the ordering, if any.
std::optional<OrderingComparison> contextuality_witness(const QuantumState& chi,
                                                        const MeasurementContext& ctx,
                                                        std::span<const int> ordering,
                                                        int grid_points = 1000);

/// Non-dispersion-free reduction: a Bernoulli draw with success probability
/// |<phi|chi>|^2.
bool measure_ndf(const QuantumState& chi, const QuantumState& phi, RandomStream& rng);

/// Event "slot `outcome` of `context` fires".
struct ContextEvent {
  MeasurementContext context;
  int outcome;
};

/// Dispersion-free model behind the common ontological-model contract.
class DispersionFreeModel {
 public:
  using Preparation = QuantumState;
  using OnticState = BellOnticState;
  using Evolution = UnitaryOp;
  using Event = ContextEvent;

  explicit DispersionFreeModel(int dimension);

  std::string name() const { return "bell-df"; }
  std::optional<int> hilbert_dimension() const noexcept { return dimension_; }
  /// Normalized chi modulo global phase (2N - 2) plus lambda.
  int ontic_dimension() const noexcept { return 2 * dimension_ - 1; }
  bool dispersion_free() const noexcept { return true; }

  BellOnticState sample(const QuantumState& psi, RandomStream& rng) const;
  /// 1 when chi and psi are the same ray (within 1e-10) and lambda lies in
  /// [0, 1]; 0 otherwise.
  double density_or_support(const BellOnticState& x, const QuantumState& psi) const;
  BellOnticState evolve(const BellOnticState& x, const UnitaryOp& u) const;
  QuantumState evolve_preparation(const QuantumState& psi, const UnitaryOp& u) const;
  UnitaryOp compose(const UnitaryOp& first, const UnitaryOp& second) const;
  double event_probability(const BellOnticState& x, const ContextEvent& event) const;
  double born_probability(const ContextEvent& event, const QuantumState& psi) const;
  double distance(const BellOnticState& a, const BellOnticState& b) const;

 private:
  int dimension_;
};

/// The 2N - 2 dimensional non-dispersion-free model: chi = psi and
/// P(phi | chi) = |<phi|chi>|^2.
class TrivialModel {
 public:
  using Preparation = QuantumState;
  using OnticState = QuantumState;
  using Evolution = UnitaryOp;
  using Event = QuantumState;

  explicit TrivialModel(int dimension);

  std::string name() const { return "bell-ndf"; }
  std::optional<int> hilbert_dimension() const noexcept { return dimension_; }
  int ontic_dimension() const noexcept { return 2 * dimension_ - 2; }
  bool dispersion_free() const noexcept { return false; }

  QuantumState sample(const QuantumState& psi, RandomStream& rng) const;
  double density_or_support(const QuantumState& chi, const QuantumState& psi) const;
  QuantumState evolve(const QuantumState& chi, const UnitaryOp& u) const;
  QuantumState evolve_preparation(const QuantumState& psi, const UnitaryOp& u) const;
  UnitaryOp compose(const UnitaryOp& first, const UnitaryOp& second) const;
  double event_probability(const QuantumState& chi, const QuantumState& phi) const;
  double born_probability(const QuantumState& phi, const QuantumState& psi) const;
  double distance(const QuantumState& a, const QuantumState& b) const;

 private:
  int dimension_;
};

}  // namespace onticlab::bell
