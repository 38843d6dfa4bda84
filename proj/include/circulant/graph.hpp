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

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circulant/errors.hpp"
#include "circulant/jump_set.hpp"
#include "circulant/permutation.hpp"
#include "circulant/residues.hpp"

namespace circulant {

/// Unordered vertex pair stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge make(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Explicit simple edge set over Z_n, kept sorted and duplicate-free.
class EdgeSet {
 public:
  // Throws RangeError on self-loops or out-of-range endpoints. Duplicates
  // (in either orientation) are collapsed.
  EdgeSet(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
    for (Edge& e : edges_) {
      if (e.u == e.v) throw RangeError("self-loop at vertex " + std::to_string(e.u));
      if (e.u < 0 || e.v < 0 || e.u >= order_ || e.v >= order_) {
        throw RangeError("edge endpoint outside Z_" + std::to_string(order_));
      }
      e = Edge::make(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool contains(int a, int b) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge::make(a, b));
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(order_), 0);
    for (const Edge& e : edges_) {
      ++deg[e.u];
      ++deg[e.v];
    }
    return deg;
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(order_));
    for (const Edge& e : edges_) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
  }

  EdgeSet relabeled(const VertexPermutation& perm) const {
    if (perm.order() != order_) throw OrderMismatchError("permutation order differs from edge set order");
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.push_back(Edge::make(perm(e.u), perm(e.v)));
    return EdgeSet(order_, std::move(out));
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  int order_;
  std::vector<Edge> edges_;
};

/// C_n(R): vertices Z_n, u ~ v iff the reflexive residue of v - u is in R.
class CirculantGraph {
 public:
  explicit CirculantGraph(JumpSet jumps) : jumps_(std::move(jumps)) {}

  int order() const noexcept { return jumps_.order(); }
  const JumpSet& jumps() const noexcept { return jumps_; }
  int degree() const noexcept { return jumps_.degree(); }

  bool adjacent(int a, int b) const { return a != b && jumps_.contains(reflect(b - a, order())); }

  friend bool operator==(const CirculantGraph&, const CirculantGraph&) = default;
  friend auto operator<=>(const CirculantGraph& a, const CirculantGraph& b) {
    return a.jumps_ <=> b.jumps_;
  }

 private:
  JumpSet jumps_;
};

inline CirculantGraph build_graph(int n, std::span<const std::int64_t> raw_jumps) {
  if (n < 3) throw RangeError("circulant graph order must be at least 3, got " + std::to_string(n));
  return CirculantGraph(reflexive_reduce(n, raw_jumps));
}

inline CirculantGraph build_graph(int n, std::initializer_list<std::int64_t> raw_jumps) {
  return build_graph(n, std::span<const std::int64_t>(raw_jumps.begin(), raw_jumps.size()));
}

/// n * degree / 2 edges.
inline EdgeSet edges(const CirculantGraph& g) {
  const int n = g.order();
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(n) * g.jumps().size());
  for (int v = 0; v < n; ++v) {
    for (const int r : g.jumps().jumps()) out.push_back(Edge::make(v, (v + r) % n));
  }
  return EdgeSet(n, std::move(out));
}

/// If `e` is invariant under v -> v + 1 (mod n), returns the jump set read
/// off the neighbours of vertex 0. Otherwise (including the empty edge set,
/// which has no valid jump set) returns nullopt.
///
/// This tests circulance in the given labeling only; a graph isomorphic to a
/// circulant but labeled differently reports nullopt.
inline std::optional<JumpSet> circulant_jumps_of(const EdgeSet& e) {
  const int n = e.order();
  if (n < 2 || e.size() == 0) return std::nullopt;
  const auto deg = e.degrees();
  if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end()) {
    return std::nullopt;
  }
  for (const Edge& ed : e.edges()) {
    if (!e.contains((ed.u + 1) % n, (ed.v + 1) % n)) return std::nullopt;
  }
  std::vector<std::int64_t> diffs;
  for (const Edge& ed : e.edges()) {
    if (ed.u == 0) diffs.push_back(ed.v);
  }
  return reflexive_reduce(n, std::span<const std::int64_t>(diffs));
}

/// k.C_n(T) = C_{kn}(kT).
inline CirculantGraph scale(int k, const CirculantGraph& g) {
  if (k < 1) throw RangeError("scale factor must be positive, got " + std::to_string(k));
  const int kn = k * g.order();
  std::vector<std::int64_t> jumps;
  for (const int r : g.jumps().jumps()) jumps.push_back(static_cast<std::int64_t>(k) * r);
  return CirculantGraph(reflexive_reduce(kn, std::span<const std::int64_t>(jumps)));
}

/// Number of connected components: gcd(n, r_1, ..., r_k).
inline int component_count(const CirculantGraph& g) {
  int d = g.order();
  for (const int r : g.jumps().jumps()) d = std::gcd(d, r);
  return d;
}

}  // namespace circulant
