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
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace onticlab {

/// Nodes and weights of a one-dimensional quadrature rule.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

/// Orthonormal frame whose third column is `axis` (normalized).
Eigen::Matrix3d frame_with_axis(const Eigen::Vector3d& axis);

/// Product-grid resolution for sphere integrals.
struct SphereGrid {
  int polar_nodes = 128;
  int azimuth_nodes = 256;
};

/// Integrates f(v) dOmega over the unit sphere with Gauss-Legendre in the
/// polar angle (measured from `axis`) and the trapezoid rule in azimuth.
///
/// `polar_breaks` split [0, pi] into pieces that are each integrated with
/// grid.polar_nodes nodes; put them where f has a kink or jump in the polar
/// angle (e.g. at pi/2 for a hemisphere-supported density aligned with
/// `axis`).
template <typename F>
double integrate_sphere(F&& f, const Eigen::Vector3d& axis = Eigen::Vector3d::UnitZ(),
                        std::span<const double> polar_breaks = {}, SphereGrid grid = {}) {
  const Eigen::Matrix3d frame = frame_with_axis(axis);
  std::vector<double> edges{0.0};
  for (const double b : polar_breaks) {
    if (b > 0.0 && b < std::numbers::pi) edges.push_back(b);
  }
  edges.push_back(std::numbers::pi);
  std::sort(edges.begin(), edges.end());

  const double dphi = 2.0 * std::numbers::pi / grid.azimuth_nodes;
  double total = 0.0;
  for (std::size_t piece = 0; piece + 1 < edges.size(); ++piece) {
    if (edges[piece + 1] <= edges[piece]) continue;
    const QuadratureRule rule =
        gauss_legendre(grid.polar_nodes, edges[piece], edges[piece + 1]);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double alpha = rule.nodes[i];
      const double s = std::sin(alpha);
      const double c = std::cos(alpha);
      double ring = 0.0;
      for (int j = 0; j < grid.azimuth_nodes; ++j) {
        const double phi = j * dphi;
        const Eigen::Vector3d v =
            frame * Eigen::Vector3d(s * std::cos(phi), s * std::sin(phi), c);
        ring += f(v);
      }
      total += rule.weights[i] * s * ring * dphi;
    }
  }
  return total;
}

}  // namespace onticlab
