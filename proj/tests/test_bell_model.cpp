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
#include <vector>

#include "onticlab/bell_model.hpp"
#include "onticlab/random.hpp"

namespace onticlab::bell {
namespace {

QuantumState uniform_superposition(int n) {
  return QuantumState::normalized(ComplexVector::Ones(n));
}

TEST(Context, ValidatesOrthonormality) {
  std::vector<QuantumState> bad{QuantumState::basis(2, 0), QuantumState::basis(2, 0)};
  EXPECT_THROW(MeasurementContext{bad}, std::invalid_argument);
  std::vector<QuantumState> short_basis{QuantumState::basis(3, 0)};
  EXPECT_THROW(MeasurementContext{short_basis}, std::invalid_argument);
  const auto ctx = MeasurementContext::standard(3);
  EXPECT_THROW(ctx.vector(0), std::out_of_range);
  const std::vector<int> not_permutation{1, 1, 2};
  EXPECT_THROW(ctx.permuted(not_permutation), std::invalid_argument);
}

TEST(Context, PermutedSlotsFollowOrdering) {
  const auto ctx = MeasurementContext::standard(3);
  const std::vector<int> ordering{2, 3, 1};
  const auto p = ctx.permuted(ordering);
  EXPECT_TRUE(same_ray(p.vector(1), ctx.vector(2)));
  EXPECT_TRUE(same_ray(p.vector(3), ctx.vector(1)));
}

TEST(Measure, CumulativeRuleAndBoundaries) {
  const auto ctx = MeasurementContext::standard(3);
  const QuantumState chi = uniform_superposition(3);
  const auto c = cumulative_weights(chi, ctx);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_NEAR(c[0], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(c[2], 1.0, 1e-15);
  EXPECT_EQ(measure(BellOnticState(chi, 0.2), ctx), 1);
  EXPECT_EQ(measure(BellOnticState(chi, 0.5), ctx), 2);
  EXPECT_EQ(measure(BellOnticState(chi, 1.0), ctx), 3);
  EXPECT_EQ(measure(BellOnticState(QuantumState::basis(3, 1), 0.0), ctx), 2);
  EXPECT_THROW(BellOnticState(chi, 1.5), std::invalid_argument);
}

TEST(Measure, IntervalLengthsAreBornProbabilities) {
  RandomStream rng(9);
  for (const int n : {2, 3, 4, 6}) {
    const QuantumState psi = random_state(n, rng);
    const auto ctx = MeasurementContext::from_unitary(random_unitary(n, rng));
    const auto c = cumulative_weights(psi, ctx);
    double previous = 0.0;
    for (int k = 1; k <= n; ++k) {
      EXPECT_NEAR(c[k - 1] - previous, born_probability(ctx.vector(k), psi), 1e-12);
      previous = c[k - 1];
    }
  }
}

TEST(Contextuality, HandCheckedOrderings) {
  const QuantumState chi = uniform_superposition(3);
  const auto ctx = MeasurementContext::standard(3);
  const std::vector<int> ordering{2, 3, 1};
  const auto cmp = compare_orderings(chi, ctx, ordering, 0.5);
  EXPECT_EQ(cmp.outcome_original, 2);
  EXPECT_EQ(cmp.outcome_permuted, 3);
  EXPECT_TRUE(cmp.differs());
  const auto witness = contextuality_witness(chi, ctx, ordering);
  ASSERT_TRUE(witness.has_value());
  EXPECT_NE(witness->outcome_original, witness->outcome_permuted);
}

TEST(Contextuality, IdentityOrderingHasNoWitness) {
  RandomStream rng(2);
  const QuantumState chi = random_state(3, rng);
  const std::vector<int> identity{1, 2, 3};
  EXPECT_FALSE(contextuality_witness(chi, MeasurementContext::standard(3), identity).has_value());
}

TEST(Evolution, LambdaIsConstantAndOutcomesCovariant) {
  RandomStream rng(15);
  for (int i = 0; i < 50; ++i) {
    const QuantumState psi = random_state(4, rng);
    const BellOnticState x = sample(psi, rng);
    const UnitaryOp u = random_unitary(4, rng);
    const BellOnticState y = evolve(x, u);
    EXPECT_EQ(y.lambda(), x.lambda());
    EXPECT_TRUE(same_ray(y.chi(), evolve_state(psi, u)));
    const auto ctx = MeasurementContext::from_unitary(random_unitary(4, rng));
    EXPECT_EQ(measure(y, ctx.evolved(u)), measure(x, ctx));
  }
}

TEST(Models, DimensionsAndSupport) {
  const DispersionFreeModel df(3);
  const TrivialModel ndf(3);
  EXPECT_EQ(df.ontic_dimension(), 5);
  EXPECT_EQ(ndf.ontic_dimension(), 4);
  EXPECT_THROW(DispersionFreeModel(1), std::invalid_argument);
  RandomStream rng(6);
  const QuantumState psi = random_state(3, rng);
  const auto x = df.sample(psi, rng);
  EXPECT_EQ(df.density_or_support(x, psi), 1.0);
  EXPECT_EQ(df.density_or_support(x, random_orthogonal_state(psi, rng)), 0.0);
  const QuantumState phi = random_state(3, rng);
  EXPECT_NEAR(ndf.event_probability(psi, phi), born_probability(phi, psi), 1e-15);
}

TEST(Models, TrivialMeasurementFrequency) {
  RandomStream rng(21);
  const QuantumState chi = random_state(3, rng);
  const QuantumState phi = random_state(3, rng);
  const int n = 100000;
  int fired = 0;
  for (int i = 0; i < n; ++i) fired += measure_ndf(chi, phi, rng) ? 1 : 0;
  const double p = born_probability(phi, chi);
  EXPECT_LT(std::abs(fired / static_cast<double>(n) - p), 4.0 * std::sqrt(p * (1 - p) / n));
}

}  // namespace
}  // namespace onticlab::bell
