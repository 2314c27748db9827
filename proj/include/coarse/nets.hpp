// Copyright 2026 The Coarse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "coarse/graph.hpp"

namespace coarse {

enum class SpaceKind { euclidean, poincare_disk };

const char* space_name(SpaceKind k);
SpaceKind space_from_name(const std::string& name);

/// Sampled points of a metric space with exact pairwise distances:
/// the Euclidean plane, or the Poincare disk model of the hyperbolic plane
/// (curvature -1, points |z| < 1, d = acosh(1 + 2|z-w|^2 / ((1-|z|^2)(1-|w|^2)))).
class PointCloud {
 public:
  PointCloud(SpaceKind kind, std::vector<double> xs, std::vector<double> ys);

  /// Deterministic sample of `count` points, uniform with respect to the
  /// space's area measure on the disk of radius `radius` (hyperbolic radius
  /// for the Poincare disk: inverse-CDF in radius, uniform angle).
  static PointCloud sample(SpaceKind kind, double radius, int count, std::uint64_t seed);

  SpaceKind kind() const { return kind_; }
  int size() const { return static_cast<int>(xs_.size()); }
  double x(int i) const { return xs_[i]; }
  double y(int i) const { return ys_[i]; }

  double dist(int i, int j) const;
  double dist_to(double px, double py, int j) const;

  /// Distance comparisons without transcendentals: fills out[j] with the
  /// squared Euclidean distance or the cosh of the hyperbolic distance from
  /// point i; comparable_threshold maps a true distance to the same scale.
  void comparable_row(int i, double* out) const;
  double comparable_threshold(double d) const;
  double dist_from_comparable(double c) const;

  /// CSV with a "# space: <kind>" header line; round-trips.
  static PointCloud from_csv(std::istream& in);
  std::string to_csv() const;

 private:
  SpaceKind kind_;
  std::vector<double> xs_, ys_;
  std::vector<double> one_minus_norm2_;  // poincare only
};

/// Greedy maximal r-separated subset in index order: a point is selected
/// iff it lies at distance >= r from every previously selected point. The
/// result is maximal, hence its r-balls cover the cloud.
std::vector<int> r_approximation(const PointCloud& cloud, double r);

/// Discretization graph on an epsilon-approximation: vertices are the
/// selected points, edges join selected points at distance in (0, 2*eps].
struct NetResult {
  std::vector<int> selected;  // cloud indices, ascending
  Graph net;
  double covering_radius = 0.0;  // max over cloud points of distance to the net
  int mu = 0;                    // max degree
  double epsilon = 0.0;
};

NetResult epsilon_net(const PointCloud& cloud, double eps);

/// Uniformity constant: exact max degree.
int uniformity(const Graph& g);

/// Empirical quasi-isometry certificate for the inclusion of the net into
/// the cloud: d_X = cloud metric, d_Y = net hop metric scaled by epsilon.
/// Every sampled pair satisfies alpha^-1 d_X - beta <= d_Y <= alpha d_X + beta.
struct QIReport {
  double alpha = 1.0;
  double beta = 0.0;
  double eps_full = 0.0;  // covering radius of the net in the cloud
  int pairs = 0;
  std::uint64_t seed = 0;
};

QIReport qi_constants(const PointCloud& cloud, const NetResult& net, int pair_sample,
                      std::uint64_t seed);

}  // namespace coarse
