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

#include "onticlab/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace onticlab {
namespace {

double stephens_lambda(double statistic, std::int64_t n) {
  const double root = std::sqrt(static_cast<double>(n));
  return (root + 0.12 + 0.11 / root) * statistic;
}

}  // namespace

double z_score(double estimate, double exact, double variance, std::int64_t n) {
  if (n <= 0) {
    throw std::invalid_argument("z-score needs a positive sample count");
  }
  const double nn = static_cast<double>(n);
  double se = std::sqrt(std::max(variance, 0.0) / nn);
  if (!(se > 0.0)) {
    if (std::abs(estimate - exact) <= 1e-12) return 0.0;
    se = 1.0 / nn;
  }
  return (estimate - exact) / se;
}

double normal_cdf(double x, double mean, double variance) {
  if (!(variance > 0.0)) {
    throw std::invalid_argument("normal variance must be positive");
  }
  return 0.5 * std::erfc(-(x - mean) / std::sqrt(2.0 * variance));
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  // The alternating series converges slowly for small lambda; use the
  // Jacobi-theta form there.
  if (lambda < 1.0) {
    constexpr double pi = std::numbers::pi;
    const double x = -pi * pi / (8.0 * lambda * lambda);
    double sum = 0.0;
    for (int k = 1; k < 100; k += 2) {
      const double term = std::exp(k * k * x);
      sum += term;
      if (term < 1e-18) break;
    }
    const double cdf = std::sqrt(2.0 * pi) / lambda * sum;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k < 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    sign = -sign;
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) {
    throw std::invalid_argument("KS test needs at least one sample");
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  const auto count = static_cast<std::int64_t>(sorted.size());
  return {d, kolmogorov_survival(stephens_lambda(d, count))};
}

double ks_critical_value(std::int64_t n, double alpha) {
  if (n <= 0 || !(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("KS critical value needs n > 0 and alpha in (0, 1)");
  }
  double lo = 0.0;
  double hi = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (kolmogorov_survival(stephens_lambda(mid, n)) > alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace onticlab
