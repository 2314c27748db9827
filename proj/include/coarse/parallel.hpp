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

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>
#include <utility>
#include <vector>

namespace coarse {

/// Worker count: hardware concurrency, overridable via COARSE_THREADS.
inline int worker_count() {
  static const int n = [] {
    if (const char* env = std::getenv("COARSE_THREADS")) {
      int v = std::atoi(env);
      if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }();
  return n;
}

/// Runs fn(lo, hi) over contiguous chunks of [0, n). Chunk results are
/// combined strictly in chunk order, so any associative combine yields the
/// same result as a sequential pass regardless of worker count.
template <class T, class Fn, class Combine>
T chunked_reduce(int n, T init, Fn&& fn, Combine&& combine) {
  if (n <= 0) return init;
  int workers = std::min(worker_count(), n);
  if (workers == 1) return combine(std::move(init), fn(0, n));

  std::vector<std::future<T>> parts;
  parts.reserve(workers);
  int chunk = (n + workers - 1) / workers;
  for (int lo = 0; lo < n; lo += chunk) {
    int hi = std::min(n, lo + chunk);
    parts.push_back(std::async(std::launch::async, [&fn, lo, hi] { return fn(lo, hi); }));
  }
  T acc = std::move(init);
  for (auto& p : parts) acc = combine(std::move(acc), p.get());
  return acc;
}

/// Parallel for over chunks of [0, n); fn(lo, hi) must write disjoint state.
template <class Fn>
void chunked_for(int n, Fn&& fn) {
  if (n <= 0) return;
  int workers = std::min(worker_count(), n);
  if (workers == 1) {
    fn(0, n);
    return;
  }
  std::vector<std::future<void>> parts;
  parts.reserve(workers);
  int chunk = (n + workers - 1) / workers;
  for (int lo = 0; lo < n; lo += chunk) {
    int hi = std::min(n, lo + chunk);
    parts.push_back(std::async(std::launch::async, [&fn, lo, hi] { fn(lo, hi); }));
  }
  for (auto& p : parts) p.get();
}

}  // namespace coarse
