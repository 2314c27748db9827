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

#include "coarse/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

#include "coarse/error.hpp"
#include "coarse/parallel.hpp"

namespace coarse {

namespace {
constexpr const char* kModule = "graph-core";
}

Graph Graph::from_edges(std::span<const std::pair<int, int>> edges, int n) {
  if (n < 0) {
    int max_idx = -1;
    for (const auto& [u, v] : edges) max_idx = std::max({max_idx, u, v});
    n = max_idx + 1;
  }
  if (n <= 0) raise(errc::invalid_argument, kModule, "graph must have at least one vertex");

  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      raise(errc::invalid_argument, kModule,
            "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) {
      raise(errc::self_loop, kModule, "self-loop at vertex " + std::to_string(u));
    }
  }

  std::vector<std::pair<int, int>> canon;
  canon.reserve(edges.size());
  for (const auto& [u, v] : edges) canon.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(canon.begin(), canon.end());
  if (auto it = std::adjacent_find(canon.begin(), canon.end()); it != canon.end()) {
    raise(errc::duplicate_edge, kModule,
          "duplicate edge (" + std::to_string(it->first) + "," + std::to_string(it->second) + ")");
  }

  Graph g;
  g.n_ = n;
  std::vector<int> deg(n, 0);
  for (const auto& [u, v] : canon) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(2 * canon.size());
  std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : canon) {
    g.adj_[cursor[u]++] = v;
    g.adj_[cursor[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
  }

  // Connectivity check.
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int w : g.neighbors(queue[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) {
    raise(errc::disconnected, kModule, "graph is disconnected");
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
  int mu = 0;
  for (int v = 0; v < n_; ++v) mu = std::max(mu, degree(v));
  return mu;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    raise(errc::invalid_argument, kModule, "label count must match vertex count");
  }
  labels_ = std::move(labels);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    raise(errc::bad_format, kModule, "graph JSON needs fields n and edges");
  }
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      raise(errc::bad_format, kModule, "each edge must be a pair [u,v]");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  Graph g = from_edges(edges, n);
  if (j.contains("labels")) g.set_labels(j.at("labels").get<std::vector<std::string>>());
  return g;
}

nlohmann::json Graph::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  auto& e = j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : edges()) e.push_back({u, v});
  if (!labels_.empty()) j["labels"] = labels_;
  return j;
}

Graph Graph::from_edge_list_text(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int u, v;
    if (ls >> u >> v) edges.emplace_back(u, v);
  }
  if (edges.empty()) raise(errc::bad_format, kModule, "edge list text contains no edges");
  return from_edges(edges);
}

std::string Graph::to_edge_list_text() const {
  std::string out = "# " + std::to_string(n_) + " vertices, " +
                    std::to_string(edge_count()) + " edges\n";
  for (const auto& [u, v] : edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

std::vector<std::int32_t> bfs_distances(const Graph& g, int source) {
  std::vector<std::int32_t> dist(g.order(), -1);
  std::vector<int> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    std::int32_t du = dist[u];
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = du + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistMatrix apsp(const Graph& g) {
  const int n = g.order();
  std::vector<std::int32_t> data(static_cast<std::size_t>(n) * n);
  chunked_for(n, [&](int lo, int hi) {
    std::vector<int> queue;
    queue.reserve(n);
    for (int s = lo; s < hi; ++s) {
      std::int32_t* row = data.data() + static_cast<std::size_t>(s) * n;
      std::fill(row, row + n, -1);
      queue.clear();
      queue.push_back(s);
      row[s] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        std::int32_t du = row[u];
        for (int w : g.neighbors(u)) {
          if (row[w] < 0) {
            row[w] = du + 1;
            queue.push_back(w);
          }
        }
      }
    }
  });
  return DistMatrix(n, std::move(data));
}

int DistMatrix::eccentricity(int v) const {
  int ecc = 0;
  const std::int32_t* r = row(v);
  for (int u = 0; u < n_; ++u) ecc = std::max(ecc, static_cast<int>(r[u]));
  return ecc;
}

int DistMatrix::diameter() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, eccentricity(v));
  return d;
}

std::vector<int> DistMatrix::ball(int v, int r) const {
  std::vector<int> out;
  const std::int32_t* dv = row(v);
  for (int u = 0; u < n_; ++u) {
    if (dv[u] <= r) out.push_back(u);
  }
  return out;
}

std::vector<int> DistMatrix::sphere(int v, int r) const {
  std::vector<int> out;
  const std::int32_t* dv = row(v);
  for (int u = 0; u < n_; ++u) {
    if (dv[u] == r) out.push_back(u);
  }
  return out;
}

GeodesicList geodesics_between(const Graph& g, const DistMatrix& d, int u, int v,
                               std::size_t cap) {
  if (cap < 1) raise(errc::invalid_argument, kModule, "geodesic cap must be >= 1");
  GeodesicList out;
  const std::int32_t* du = d.row(u);
  const std::int32_t* dv = d.row(v);
  const std::int32_t total = du[v];

  // DFS over the shortest-path DAG; neighbors ascend, so paths come out in
  // lexicographic order.
  std::vector<int> path{u};
  std::vector<std::size_t> cursor{0};
  while (!cursor.empty()) {
    int cur = path.back();
    if (cur == v) {
      if (out.paths.size() == cap) {
        out.truncated = true;
        break;
      }
      out.paths.push_back(Geodesic{path});
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    auto nb = g.neighbors(cur);
    bool descended = false;
    while (cursor.back() < nb.size()) {
      int w = nb[cursor.back()++];
      if (du[w] == du[cur] + 1 && du[w] + dv[w] == total) {
        path.push_back(w);
        cursor.push_back(0);
        descended = true;
        break;
      }
    }
    if (!descended) {
      path.pop_back();
      cursor.pop_back();
    }
  }
  return out;
}

Graph gen_path(int n) {
  if (n <= 0) raise(errc::invalid_argument, kModule, "path size must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(edges, n + 1);
}

Graph gen_cycle(int n) {
  if (n < 3) raise(errc::invalid_argument, kModule, "cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(edges, n);
}

Graph gen_tree(int k, int depth) {
  if (k < 2 || depth <= 0) {
    raise(errc::invalid_argument, kModule, "tree needs branching >= 2 and positive depth");
  }
  // Ball of the k-regular infinite tree: the root has k children, every
  // other internal vertex has k-1 children.
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels{"r"};
  std::vector<std::pair<int, std::string>> level{{0, "r"}};
  int next = 1;
  for (int d = 1; d <= depth; ++d) {
    std::vector<std::pair<int, std::string>> next_level;
    for (const auto& [parent, label] : level) {
      int children = (parent == 0) ? k : k - 1;
      for (int c = 0; c < children; ++c) {
        std::string child_label = (parent == 0 ? std::to_string(c)
                                               : label + "." + std::to_string(c));
        edges.emplace_back(parent, next);
        labels.push_back(child_label);
        next_level.emplace_back(next, child_label);
        ++next;
      }
    }
    level = std::move(next_level);
  }
  Graph g = Graph::from_edges(edges, next);
  g.set_labels(std::move(labels));
  return g;
}

Graph gen_grid(int rows, int cols) {
  if (rows <= 0 || cols <= 0) raise(errc::invalid_argument, kModule, "grid sizes must be positive");
  if (rows * cols == 1) return Graph::from_edges({}, 1);
  auto id = [cols](int i, int j) { return i * cols + j; };
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      labels.push_back(std::to_string(i) + "," + std::to_string(j));
      if (i + 1 < rows) edges.emplace_back(id(i, j), id(i + 1, j));
      if (j + 1 < cols) edges.emplace_back(id(i, j), id(i, j + 1));
    }
  }
  Graph g = Graph::from_edges(edges, rows * cols);
  g.set_labels(std::move(labels));
  return g;
}

Graph gen_ladder(int n) {
  if (n < 2) raise(errc::invalid_argument, kModule, "ladder needs at least 2 rungs");
  return gen_grid(n, 2);
}

Graph gen_comb(int n, double slope) {
  if (n <= 0 || slope < 0 || !std::isfinite(slope)) {
    raise(errc::invalid_argument, kModule, "comb needs positive spine and slope >= 0");
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) {
    labels.push_back("s" + std::to_string(i));
    if (i < n) edges.emplace_back(i, i + 1);
  }
  int next = n + 1;
  for (int i = 0; i <= n; ++i) {
    int len = static_cast<int>(std::floor(slope * i));
    int prev = i;
    for (int t = 1; t <= len; ++t) {
      edges.emplace_back(prev, next);
      labels.push_back("t" + std::to_string(i) + "." + std::to_string(t));
      prev = next++;
    }
  }
  Graph g = Graph::from_edges(edges, next);
  g.set_labels(std::move(labels));
  return g;
}

FamilySpec FamilySpec::parse(const std::string& text) {
  auto open = text.find('(');
  auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    raise(errc::bad_format, kModule, "family spec must look like name(arg,...): " + text);
  }
  FamilySpec spec;
  spec.name = text.substr(0, open);
  std::string args = text.substr(open + 1, close - open - 1);
  std::istringstream as(args);
  std::string token;
  while (std::getline(as, token, ',')) {
    try {
      spec.args.push_back(std::stod(token));
    } catch (const std::exception&) {
      raise(errc::bad_format, kModule, "bad family argument: " + token);
    }
  }
  return spec;
}

std::string FamilySpec::str() const {
  std::string out = name + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ",";
    double a = args[i];
    if (a == std::floor(a) && std::abs(a) < 1e15) {
      out += std::to_string(static_cast<long long>(a));
    } else {
      std::ostringstream ss;
      ss << a;
      out += ss.str();
    }
  }
  return out + ")";
}

Graph gen_family(const FamilySpec& spec) {
  auto needs = [&](std::size_t k) {
    if (spec.args.size() != k) {
      raise(errc::invalid_argument, kModule,
            spec.name + " takes " + std::to_string(k) + " argument(s)");
    }
  };
  auto arg_int = [&](std::size_t i) { return static_cast<int>(spec.args[i]); };
  if (spec.name == "path") {
    needs(1);
    return gen_path(arg_int(0));
  }
  if (spec.name == "cycle") {
    needs(1);
    return gen_cycle(arg_int(0));
  }
  if (spec.name == "tree") {
    needs(2);
    return gen_tree(arg_int(0), arg_int(1));
  }
  if (spec.name == "grid") {
    needs(2);
    return gen_grid(arg_int(0), arg_int(1));
  }
  if (spec.name == "ladder") {
    needs(1);
    return gen_ladder(arg_int(0));
  }
  if (spec.name == "comb") {
    needs(2);
    return gen_comb(arg_int(0), spec.args[1]);
  }
  raise(errc::invalid_argument, kModule, "unknown family: " + spec.name);
}

}  // namespace coarse
