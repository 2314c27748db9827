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

#include "coarse/nets.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>

#include "coarse/error.hpp"
#include "coarse/kernels.hpp"
#include "coarse/rng.hpp"

namespace coarse {

namespace {
constexpr const char* kModule = "nets";
}

const char* space_name(SpaceKind k) {
  return k == SpaceKind::euclidean ? "euclidean" : "poincare-disk";
}

SpaceKind space_from_name(const std::string& name) {
  if (name == "euclidean") return SpaceKind::euclidean;
  if (name == "poincare-disk") return SpaceKind::poincare_disk;
  raise(errc::invalid_argument, kModule, "unknown space kind: " + name);
}

PointCloud::PointCloud(SpaceKind kind, std::vector<double> xs, std::vector<double> ys)
    : kind_(kind), xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size() || xs_.empty()) {
    raise(errc::invalid_argument, kModule, "cloud needs matching, nonempty coordinate lists");
  }
  if (kind_ == SpaceKind::poincare_disk) {
    one_minus_norm2_.resize(xs_.size());
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      double norm2 = xs_[i] * xs_[i] + ys_[i] * ys_[i];
      if (norm2 >= 1.0) {
        raise(errc::invalid_argument, kModule, "poincare-disk points must satisfy |z| < 1");
      }
      one_minus_norm2_[i] = 1.0 - norm2;
    }
  }
}

PointCloud PointCloud::sample(SpaceKind kind, double radius, int count, std::uint64_t seed) {
  if (count < 1 || radius <= 0 || !std::isfinite(radius)) {
    raise(errc::invalid_argument, kModule, "sample needs count >= 1 and radius > 0");
  }
  XorShift64Star rng(seed);
  std::vector<double> xs(count), ys(count);
  if (kind == SpaceKind::euclidean) {
    for (int i = 0; i < count; ++i) {
      double r = radius * std::sqrt(rng.next_unit());
      double theta = 2.0 * M_PI * rng.next_unit();
      xs[i] = r * std::cos(theta);
      ys[i] = r * std::sin(theta);
    }
  } else {
    // Hyperbolic area of a disk of radius rho is 4*pi*sinh^2(rho/2), so the
    // radius CDF inverts to rho = 2*asinh(sqrt(u)*sinh(R/2)).
    double s = std::sinh(radius / 2.0);
    for (int i = 0; i < count; ++i) {
      double rho = 2.0 * std::asinh(std::sqrt(rng.next_unit()) * s);
      double r = std::tanh(rho / 2.0);  // Euclidean radius in the disk model
      double theta = 2.0 * M_PI * rng.next_unit();
      xs[i] = r * std::cos(theta);
      ys[i] = r * std::sin(theta);
    }
  }
  return PointCloud(kind, std::move(xs), std::move(ys));
}

double PointCloud::dist_to(double px, double py, int j) const {
  double dx = px - xs_[j];
  double dy = py - ys_[j];
  double sq = dx * dx + dy * dy;
  if (kind_ == SpaceKind::euclidean) return std::sqrt(sq);
  double qs = 1.0 - (px * px + py * py);
  double c = 1.0 + (2.0 * sq) / (qs * one_minus_norm2_[j]);
  return std::acosh(std::max(1.0, c));
}

double PointCloud::dist(int i, int j) const { return dist_to(xs_[i], ys_[i], j); }

void PointCloud::comparable_row(int i, double* out) const {
  if (kind_ == SpaceKind::euclidean) {
    kern::euclid_sq_row(xs_[i], ys_[i], xs_.data(), ys_.data(), out, size());
  } else {
    kern::poincare_cosh_row(xs_[i], ys_[i], one_minus_norm2_[i], xs_.data(), ys_.data(),
                            one_minus_norm2_.data(), out, size());
  }
}

double PointCloud::comparable_threshold(double d) const {
  return kind_ == SpaceKind::euclidean ? d * d : std::cosh(d);
}

double PointCloud::dist_from_comparable(double c) const {
  return kind_ == SpaceKind::euclidean ? std::sqrt(std::max(0.0, c))
                                       : std::acosh(std::max(1.0, c));
}

PointCloud PointCloud::from_csv(std::istream& in) {
  std::string line;
  SpaceKind kind = SpaceKind::euclidean;
  bool kind_seen = false;
  std::vector<double> xs, ys;
  while (std::getline(in, line)) {
    if (line.rfind("# space:", 0) == 0) {
      std::string name = line.substr(8);
      name.erase(0, name.find_first_not_of(" \t"));
      kind = space_from_name(name);
      kind_seen = true;
      continue;
    }
    if (line.empty() || line[0] == '#' || line.rfind("x,", 0) == 0) continue;
    std::istringstream ls(line);
    std::string sx, sy;
    if (std::getline(ls, sx, ',') && std::getline(ls, sy, ',')) {
      try {
        xs.push_back(std::stod(sx));
        ys.push_back(std::stod(sy));
      } catch (const std::exception&) {
        raise(errc::bad_format, kModule, "bad cloud CSV row: " + line);
      }
    }
  }
  if (!kind_seen) raise(errc::bad_format, kModule, "cloud CSV is missing the '# space:' header");
  return PointCloud(kind, std::move(xs), std::move(ys));
}

std::string PointCloud::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "# space: " << space_name(kind_) << "\n";
  out << "x,y\n";
  for (int i = 0; i < size(); ++i) out << xs_[i] << "," << ys_[i] << "\n";
  return out.str();
}

std::vector<int> r_approximation(const PointCloud& cloud, double r) {
  if (r <= 0 || !std::isfinite(r)) raise(errc::invalid_argument, kModule, "separation must be > 0");
  const double threshold = cloud.comparable_threshold(r);
  std::vector<int> selected;
  std::vector<double> sel_x, sel_y, sel_s;  // SoA copies for the row kernels
  const bool hyperbolic = cloud.kind() == SpaceKind::poincare_disk;
  std::vector<double> row;
  for (int i = 0; i < cloud.size(); ++i) {
    bool ok = true;
    const int m = static_cast<int>(selected.size());
    if (m > 0) {
      row.resize(m);
      if (hyperbolic) {
        double qs = 1.0 - (cloud.x(i) * cloud.x(i) + cloud.y(i) * cloud.y(i));
        kern::poincare_cosh_row(cloud.x(i), cloud.y(i), qs, sel_x.data(), sel_y.data(),
                                sel_s.data(), row.data(), m);
      } else {
        kern::euclid_sq_row(cloud.x(i), cloud.y(i), sel_x.data(), sel_y.data(), row.data(), m);
      }
      for (int j = 0; j < m; ++j) {
        if (row[j] < threshold) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      selected.push_back(i);
      sel_x.push_back(cloud.x(i));
      sel_y.push_back(cloud.y(i));
      if (hyperbolic) sel_s.push_back(1.0 - (cloud.x(i) * cloud.x(i) + cloud.y(i) * cloud.y(i)));
    }
  }
  return selected;
}

int uniformity(const Graph& g) { return g.max_degree(); }

NetResult epsilon_net(const PointCloud& cloud, double eps) {
  if (eps <= 0 || !std::isfinite(eps)) raise(errc::invalid_argument, kModule, "epsilon must be > 0");
  NetResult out;
  out.epsilon = eps;
  out.selected = r_approximation(cloud, eps);
  const int m = static_cast<int>(out.selected.size());

  std::vector<double> sel_x(m), sel_y(m), sel_s(m);
  const bool hyperbolic = cloud.kind() == SpaceKind::poincare_disk;
  for (int a = 0; a < m; ++a) {
    int i = out.selected[a];
    sel_x[a] = cloud.x(i);
    sel_y[a] = cloud.y(i);
    if (hyperbolic) sel_s[a] = 1.0 - (cloud.x(i) * cloud.x(i) + cloud.y(i) * cloud.y(i));
  }

  const double edge_threshold = cloud.comparable_threshold(2.0 * eps);
  std::vector<std::pair<int, int>> edges;
  std::vector<double> row(m);
  for (int a = 0; a < m; ++a) {
    if (hyperbolic) {
      kern::poincare_cosh_row(sel_x[a], sel_y[a], sel_s[a], sel_x.data(), sel_y.data(),
                              sel_s.data(), row.data(), m);
    } else {
      kern::euclid_sq_row(sel_x[a], sel_y[a], sel_x.data(), sel_y.data(), row.data(), m);
    }
    for (int b = a + 1; b < m; ++b) {
      if (row[b] <= edge_threshold) edges.emplace_back(a, b);
    }
  }

  try {
    out.net = Graph::from_edges(edges, m);
  } catch (const Error& e) {
    if (e.code() == errc::disconnected) {
      raise(errc::disconnected_net, kModule,
            "epsilon-net is disconnected: the cloud undersamples the space at epsilon = " +
                std::to_string(eps));
    }
    throw;
  }
  out.mu = out.net.max_degree();

  // Covering radius: max over cloud points of distance to the nearest
  // selected point. Maximality of the greedy scan keeps this <= eps.
  double worst = 0.0;
  for (int i = 0; i < cloud.size(); ++i) {
    if (hyperbolic) {
      double qs = 1.0 - (cloud.x(i) * cloud.x(i) + cloud.y(i) * cloud.y(i));
      kern::poincare_cosh_row(cloud.x(i), cloud.y(i), qs, sel_x.data(), sel_y.data(),
                              sel_s.data(), row.data(), m);
    } else {
      kern::euclid_sq_row(cloud.x(i), cloud.y(i), sel_x.data(), sel_y.data(), row.data(), m);
    }
    double best = row[0];
    for (int b = 1; b < m; ++b) best = std::min(best, row[b]);
    worst = std::max(worst, best);
  }
  out.covering_radius = cloud.dist_from_comparable(worst);
  return out;
}

QIReport qi_constants(const PointCloud& cloud, const NetResult& net, int pair_sample,
                      std::uint64_t seed) {
  if (pair_sample < 1) raise(errc::invalid_argument, kModule, "pair sample must be >= 1");
  const int m = net.net.order();
  if (m < 2) raise(errc::invalid_argument, kModule, "net needs at least two points");

  XorShift64Star rng(seed);
  std::map<int, std::vector<std::int32_t>> hop_cache;
  std::vector<std::pair<double, double>> pairs;  // (d_X, d_Y)
  pairs.reserve(pair_sample);
  for (int t = 0; t < pair_sample; ++t) {
    int a = static_cast<int>(rng.next_below(m));
    int b = static_cast<int>(rng.next_below(m));
    if (a == b) b = (b + 1) % m;
    auto it = hop_cache.find(a);
    if (it == hop_cache.end()) it = hop_cache.emplace(a, bfs_distances(net.net, a)).first;
    double dy = net.epsilon * it->second[b];
    double dx = cloud.dist(net.selected[a], net.selected[b]);
    pairs.emplace_back(dx, dy);
  }

  double alpha_raw = 1.0, mean_dx = 0.0;
  for (const auto& [dx, dy] : pairs) {
    alpha_raw = std::max({alpha_raw, dx / dy, dy / dx});
    mean_dx += dx;
  }
  mean_dx /= static_cast<double>(pairs.size());

  // Scan a 100-point alpha grid; beta(alpha) is the smallest additive slack
  // making every pair feasible. The reported pair minimizes the balanced
  // envelope beta + (alpha - 1) * mean(d_X), ties to the smaller alpha.
  double best_alpha = alpha_raw, best_beta = 0.0, best_score = 0.0;
  bool first = true;
  for (int step = 0; step < 100; ++step) {
    double alpha = 1.0 + (alpha_raw - 1.0) * step / 99.0;
    double beta = 0.0;
    for (const auto& [dx, dy] : pairs) {
      beta = std::max({beta, dy - alpha * dx, dx / alpha - dy});
    }
    double score = beta + (alpha - 1.0) * mean_dx;
    if (first || score < best_score) {
      first = false;
      best_score = score;
      best_alpha = alpha;
      best_beta = beta;
    }
  }

  QIReport out;
  out.alpha = best_alpha;
  out.beta = best_beta;
  out.eps_full = net.covering_radius;
  out.pairs = static_cast<int>(pairs.size());
  out.seed = seed;
  return out;
}

}  // namespace coarse
