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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace coarse {

/// Undirected, unweighted, connected graph with the unit-length edge metric.
/// Immutable after construction; neighbor lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. n < 0 infers the order as max index + 1.
  /// Rejects self-loops, duplicate edges (in either orientation) and
  /// disconnected input with distinct error codes.
  static Graph from_edges(std::span<const std::pair<int, int>> edges, int n = -1);

  int order() const { return n_; }
  std::size_t edge_count() const { return adj_.size() / 2; }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(int u, int v) const;

  /// Max degree; the uniformity constant of the graph.
  int max_degree() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

  // Serialization: JSON object {n, edges, labels?} and "u v" line text with
  // '#' comments. Both formats round-trip.
  static Graph from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  static Graph from_edge_list_text(std::istream& in);
  std::string to_edge_list_text() const;

 private:
  int n_ = 0;
  std::vector<int> offsets_;
  std::vector<int> adj_;
  std::vector<std::string> labels_;
};

/// Exact all-pairs hop distances, row-major int32. BFS from every source;
/// sources run in parallel and the result is identical to a sequential pass.
class DistMatrix {
 public:
  DistMatrix() = default;
  DistMatrix(int n, std::vector<std::int32_t> data) : n_(n), d_(std::move(data)) {}

  int order() const { return n_; }
  std::int32_t operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  const std::int32_t* row(int u) const { return d_.data() + static_cast<std::size_t>(u) * n_; }

  int eccentricity(int v) const;
  int diameter() const;

  /// Closed ball B(v, r), sorted ascending.
  std::vector<int> ball(int v, int r) const;
  /// Sphere S(v, r) = vertices at hop distance exactly r, sorted ascending.
  std::vector<int> sphere(int v, int r) const;

 private:
  int n_ = 0;
  std::vector<std::int32_t> d_;
};

DistMatrix apsp(const Graph& g);

/// Single-source hop distances (BFS); cheaper than apsp when one row suffices.
std::vector<std::int32_t> bfs_distances(const Graph& g, int source);

struct Geodesic {
  std::vector<int> vertices;  // consecutive vertices adjacent, shortest
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct GeodesicList {
  std::vector<Geodesic> paths;
  bool truncated = false;
};

/// All geodesics from u to v in lexicographic vertex order, up to cap; the
/// truncated flag reports whether the enumeration was cut short.
GeodesicList geodesics_between(const Graph& g, const DistMatrix& d, int u, int v,
                               std::size_t cap = 10000);

// Deterministic generators for the control families.
Graph gen_path(int n);                   // vertices 0..n
Graph gen_cycle(int n);                  // n >= 3
Graph gen_tree(int k, int depth);        // ball of the k-regular infinite tree
Graph gen_grid(int rows, int cols);      // rows x cols lattice
Graph gen_ladder(int n);                 // 2 x n lattice
Graph gen_comb(int n, double slope);     // spine 0..n, tooth of length floor(slope*i) at i

/// Parsed "name(arg,...)" family spec, e.g. "tree(3,5)" or "comb(40,0.5)".
struct FamilySpec {
  std::string name;
  std::vector<double> args;

  static FamilySpec parse(const std::string& text);
  std::string str() const;
};

Graph gen_family(const FamilySpec& spec);

}  // namespace coarse
