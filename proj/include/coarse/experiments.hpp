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
//
// Experiment orchestration: the verify-theorem preset, the net dichotomy
// run, and the CLI entry point that executes a configuration and writes
// reports.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "coarse/cheeger.hpp"
#include "coarse/graph.hpp"
#include "coarse/nets.hpp"
#include "coarse/rational.hpp"

namespace coarse {

/// Flat configuration mirroring the CLI flags; round-trips through JSON.
struct ExperimentConfig {
  std::string analysis;  // gen|delta|thin|cheeger|lambda1|boundary|pole|net|qi|verify-theorem|plot-data
  std::string family;
  std::string input;
  std::string out;            // output path ("" = stdout)
  std::string out_dir;        // plot-data target directory
  std::string format = "json";
  std::string space = "euclidean";
  int base = -1;              // -1 selects a central vertex
  std::vector<int> radii;
  double radius = 0.0;
  double epsilon = 0.3;
  double visual_a = 2.0;
  int count = 2000;
  int pairs = 512;
  double tolerance = 1e-10;
  std::uint64_t seed = 1;

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// One family row of the theorem check. The uniformly-perfect column is
/// evaluated only on families whose hyperbolicity proxy holds, since visual
/// metrics exist only for hyperbolic spaces; the equivalence column is
/// (hyperbolic and cheeger-positive) == (uniformly-perfect and pole-like).
struct FamilyVerdict {
  std::string family;
  bool hyperbolic = false;
  bool cheeger_positive = false;
  bool uniformly_perfect = false;
  bool pole_like = false;
  bool equivalence = false;
  nlohmann::json detail;
};

struct VerdictMatrix {
  std::vector<FamilyVerdict> rows;
  bool all_equivalent() const;
  nlohmann::json to_json() const;
};

/// Preset over {tree, path, grid, comb, poincare net} truncation families.
VerdictMatrix verify_theorem(std::uint64_t seed);

/// One net of the dichotomy run with the final ratio of its Cheeger profile.
struct KanaiSample {
  SpaceKind kind = SpaceKind::euclidean;
  int cloud_radius = 0;
  std::uint64_t seed = 0;
  int net_size = 0;
  Rational final_ratio;
  std::vector<ProfilePoint> profile;
};

struct KanaiReport {
  double epsilon = 0.3;
  std::vector<KanaiSample> samples;
  nlohmann::json to_json() const;
  const KanaiSample& at(SpaceKind kind, int radius, std::uint64_t seed) const;
};

/// Epsilon = 0.3 nets of hyperbolic-plane and Euclidean clouds at disk radii
/// 3..6 for the given seeds.
KanaiReport kanai_dichotomy(std::vector<std::uint64_t> seeds = {201, 202, 203});

/// Executes a configuration: runs the requested analysis, writes outputs
/// atomically, and returns the process exit status (0 = success, 2 =
/// theorem-equivalence violation). Operational failures throw Error.
int run(const ExperimentConfig& config);

/// Writes content to path via a temp file + rename; "" writes to stdout.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace coarse
