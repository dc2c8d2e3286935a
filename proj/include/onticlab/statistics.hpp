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

#include <cstdint>
#include <functional>
#include <span>

namespace onticlab {

/// Streaming mean and variance (Welford).
class RunningMoments {
 public:
  void add(double x) noexcept {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  std::int64_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  /// Unbiased sample variance; zero for fewer than two observations.
  double variance() const noexcept {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  }

 private:
  std::int64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// (estimate - exact) / sqrt(variance / n). When the sample variance is zero
/// the standard error is floored at 1/n, so an exact match scores 0 and a
/// mismatch scores a large finite value.
double z_score(double estimate, double exact, double variance, std::int64_t n);

/// Cumulative distribution of N(mean, variance).
double normal_cdf(double x, double mean, double variance);

/// Survival function of the Kolmogorov distribution,
/// Q(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_survival(double lambda);

struct KsResult {
  double statistic;  ///< sup |F_n - F|
  double p_value;
};

/// One-sample Kolmogorov-Smirnov test. The p-value uses the asymptotic
/// distribution with Stephens' finite-n correction.
KsResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Statistic D such that the KS p-value at sample size n equals alpha.
double ks_critical_value(std::int64_t n, double alpha);

}  // namespace onticlab
