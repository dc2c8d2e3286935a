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

#include "onticlab/quadrature.hpp"

#include <stdexcept>

namespace onticlab {

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) {
    throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
  }
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

Eigen::Matrix3d frame_with_axis(const Eigen::Vector3d& axis) {
  const double norm = axis.norm();
  if (!(norm > 0.0)) {
    throw std::invalid_argument("frame axis must be nonzero");
  }
  const Eigen::Vector3d e3 = axis / norm;
  Eigen::Index smallest = 0;
  e3.cwiseAbs().minCoeff(&smallest);
  const Eigen::Vector3d helper = Eigen::Vector3d::Unit(smallest);
  const Eigen::Vector3d e1 = (helper - helper.dot(e3) * e3).normalized();
  const Eigen::Vector3d e2 = e3.cross(e1);
  Eigen::Matrix3d frame;
  frame.col(0) = e1;
  frame.col(1) = e2;
  frame.col(2) = e3;
  return frame;
}

}  // namespace onticlab
