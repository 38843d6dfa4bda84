// Copyright 2026 The circulant-iso Authors
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

// Independent reference implementations used as oracles by the tests.
// Everything here works from first principles and shares no code with the
// library beyond its value types.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "circulant/jump_set.hpp"

namespace circulant::testing {

inline std::vector<int> naive_reduce(int n, const std::vector<std::int64_t>& raw) {
  std::set<int> out;
  for (const std::int64_t v : raw) {
    const int r = static_cast<int>(((v % n) + n) % n);
    out.insert(std::min(r, n - r));
  }
  return {out.begin(), out.end()};
}

inline std::vector<int> naive_units(int n) {
  std::vector<int> out;
  for (int x = 1; x < std::max(n, 2); ++x) {
    if (std::gcd(x, n) == 1) out.push_back(x);
  }
  return out;
}

inline std::set<std::pair<int, int>> naive_edges(int n, const std::vector<int>& jumps) {
  std::set<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u) {
    for (const int r : jumps) {
      const int v = (u + r) % n;
      out.insert({std::min(u, v), std::max(u, v)});
    }
  }
  return out;
}

inline int naive_components(int n, const std::vector<int>& jumps) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const auto& [u, v] : naive_edges(n, jumps)) parent[find(u)] = find(v);
  std::set<int> roots;
  for (int v = 0; v < n; ++v) roots.insert(find(v));
  return static_cast<int>(roots.size());
}

inline std::set<std::vector<int>> naive_orbit(int n, const std::vector<int>& jumps) {
  std::set<std::vector<int>> out;
  for (const int x : naive_units(n)) {
    std::vector<std::int64_t> scaled;
    for (const int r : jumps) scaled.push_back(static_cast<std::int64_t>(x) * r);
    out.insert(naive_reduce(n, scaled));
  }
  return out;
}

// Jump set of the theta image, or empty if the image is not a circulant.
inline std::vector<int> naive_theta_image(int n, int m, int t, const std::vector<int>& jumps) {
  auto theta = [&](int x) { return (x + (x % m) * t * m) % n; };
  std::set<std::pair<int, int>> image;
  for (const auto& [u, v] : naive_edges(n, jumps)) {
    const int a = theta(u);
    const int b = theta(v);
    image.insert({std::min(a, b), std::max(a, b)});
  }
  std::set<std::pair<int, int>> rotated;
  for (const auto& [u, v] : image) {
    const int a = (u + 1) % n;
    const int b = (v + 1) % n;
    rotated.insert({std::min(a, b), std::max(a, b)});
  }
  if (rotated != image) return {};
  std::vector<std::int64_t> diffs;
  for (const auto& [u, v] : image) {
    if (u == 0) diffs.push_back(v);
  }
  return naive_reduce(n, diffs);
}

inline std::vector<int> as_vector(const JumpSet& s) { return {s.jumps().begin(), s.jumps().end()}; }

// Random k-subset of [1, n/2].
inline std::vector<int> random_jumps(std::mt19937_64& rng, int n, int k) {
  std::vector<int> all(n / 2);
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(std::min<int>(k, n / 2)));
  std::sort(all.begin(), all.end());
  return all;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace circulant::testing
