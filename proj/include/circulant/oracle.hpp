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
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "circulant/errors.hpp"
#include "circulant/graph.hpp"
#include "circulant/permutation.hpp"
#include "circulant/residues.hpp"
#include "circulant/type2.hpp"

namespace circulant {

inline constexpr double kSpectrumTolerance = 1e-9;
inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

/// Adjacency eigenvalues of a circulant graph, ascending.
inline std::vector<double> spectrum(const CirculantGraph& g) {
  const int n = g.order();
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    double lambda = 0.0;
    for (const int r : g.jumps().jumps()) {
      const std::int64_t qr = static_cast<std::int64_t>(q) * r % n;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(qr) / n;
      lambda += (2 * r == n) ? std::cos(angle) : 2.0 * std::cos(angle);
    }
    out[static_cast<std::size_t>(q)] = lambda;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// lambda_q is a function of the multiset {reflect(q*r)}; equal key multisets
// give equal spectra exactly.
inline std::vector<std::vector<int>> spectral_keys(const CirculantGraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    auto& key = keys[static_cast<std::size_t>(q)];
    for (const int r : g.jumps().jumps()) {
      key.push_back(static_cast<int>(reflect(static_cast<std::int64_t>(q) * r, n)));
    }
    std::sort(key.begin(), key.end());
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace detail

inline bool spectra_equal(const CirculantGraph& a, const CirculantGraph& b) {
  if (a.order() != b.order()) return false;
  if (detail::spectral_keys(a) == detail::spectral_keys(b)) return true;
  const auto sa = spectrum(a);
  const auto sb = spectrum(b);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (std::abs(sa[i] - sb[i]) > kSpectrumTolerance) return false;
  }
  return true;
}

enum class OracleResult { Isomorphic, NonIsomorphic, Timeout };

inline const char* oracle_result_name(OracleResult r) {
  switch (r) {
    case OracleResult::Isomorphic: return "Isomorphic";
    case OracleResult::NonIsomorphic: return "NonIsomorphic";
    case OracleResult::Timeout: return "Timeout";
  }
  return "?";
}

struct OracleVerdict {
  OracleResult result = OracleResult::Timeout;
  std::optional<VertexPermutation> permutation;  // set iff Isomorphic
  // "degree", "spectrum", "refinement" or "exhausted" for NonIsomorphic;
  // "identity" or "search" for Isomorphic; "budget" for Timeout.
  std::string distinguisher;
  std::uint64_t expansions = 0;
};

namespace detail {

class IsoSearch {
 public:
  IsoSearch(const CirculantGraph& a, const CirculantGraph& b, std::uint64_t budget)
      : n_(a.order()), budget_(budget), adj_(static_cast<std::size_t>(2 * n_)) {
    add(a, 0);
    add(b, n_);
  }

  // Colors over the disjoint union: vertices [0, n) are in a, [n, 2n) in b.
  std::optional<VertexPermutation> run(bool& timed_out) {
    std::vector<int> colors(static_cast<std::size_t>(2 * n_), 0);
    // Rotations act transitively, so 0 may be sent to 0.
    colors[0] = colors[static_cast<std::size_t>(n_)] = 1;
    if (!refine(colors)) {
      refinement_failed_ = true;
      return std::nullopt;
    }
    auto found = search(colors);
    timed_out = timed_out_;
    return found;
  }

  std::uint64_t expansions() const noexcept { return expansions_; }
  bool refinement_failed() const noexcept { return refinement_failed_; }

 private:
  void add(const CirculantGraph& g, int base) {
    for (int v = 0; v < n_; ++v) {
      auto& list = adj_[static_cast<std::size_t>(base + v)];
      for (const int r : g.jumps().jumps()) {
        list.push_back(base + (v + r) % n_);
        if (2 * r != n_) list.push_back(base + (v - r + n_) % n_);
      }
    }
  }

  // Iterated (color, sorted neighbour colors) refinement to a fixed point.
  // Fails when some color has different multiplicities in a and b.
  bool refine(std::vector<int>& colors) const {
    const std::size_t total = colors.size();
    std::size_t classes = 0;
    for (;;) {
      std::map<std::vector<int>, int> ids;
      std::vector<std::vector<int>> sig(total);
      for (std::size_t v = 0; v < total; ++v) {
        sig[v].push_back(colors[v]);
        std::vector<int> nb;
        for (const int w : adj_[v]) nb.push_back(colors[static_cast<std::size_t>(w)]);
        std::sort(nb.begin(), nb.end());
        sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        ids.emplace(sig[v], 0);
      }
      int next = 0;
      for (auto& [key, id] : ids) id = next++;
      std::vector<int> count(ids.size(), 0);
      for (std::size_t v = 0; v < total; ++v) {
        colors[v] = ids[sig[v]];
        count[static_cast<std::size_t>(colors[v])] += v < static_cast<std::size_t>(n_) ? 1 : -1;
      }
      if (std::any_of(count.begin(), count.end(), [](int c) { return c != 0; })) return false;
      if (ids.size() == classes) return true;
      classes = ids.size();
    }
  }

  std::optional<VertexPermutation> search(const std::vector<int>& colors) {
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < 2 * n_; ++v) cells[colors[static_cast<std::size_t>(v)]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, cell] : cells) {
      if (cell.size() > 2 && (target == nullptr || cell.size() < target->size())) target = &cell;
    }
    if (target == nullptr) {
      // Discrete: each cell is one vertex of a and one of b.
      std::vector<int> image(static_cast<std::size_t>(n_));
      for (const auto& [c, cell] : cells) image[static_cast<std::size_t>(cell[0])] = cell[1] - n_;
      VertexPermutation perm(std::move(image));
      if (consistent(perm)) return perm;
      return std::nullopt;
    }
    const int u = target->front();
    const int fresh = static_cast<int>(cells.size()) + 1;
    for (const int v : *target) {
      if (v < n_) continue;
      if (++expansions_ > budget_) {
        timed_out_ = true;
        return std::nullopt;
      }
      std::vector<int> next = colors;
      next[static_cast<std::size_t>(u)] = next[static_cast<std::size_t>(v)] = fresh;
      if (!refine(next)) continue;
      if (auto found = search(next)) return found;
      if (timed_out_) return std::nullopt;
    }
    return std::nullopt;
  }

  bool consistent(const VertexPermutation& perm) const {
    for (int v = 0; v < n_; ++v) {
      std::vector<int> mapped;
      for (const int w : adj_[static_cast<std::size_t>(v)]) mapped.push_back(perm(w) + n_);
      std::vector<int> actual = adj_[static_cast<std::size_t>(perm(v) + n_)];
      std::sort(mapped.begin(), mapped.end());
      std::sort(actual.begin(), actual.end());
      if (mapped != actual) return false;
    }
    return true;
  }

  int n_;
  std::uint64_t budget_;
  std::vector<std::vector<int>> adj_;
  std::uint64_t expansions_ = 0;
  bool timed_out_ = false;
  bool refinement_failed_ = false;
};

}  // namespace detail

/// Independent isomorphism test by individualization and refinement.
///
/// Degree and spectrum act as filters; otherwise the search branches on the
/// smallest non-singleton color cell, trying images in ascending vertex order.
/// Each branch costs one expansion against `budget`.
inline OracleVerdict brute_force_iso(const CirculantGraph& a, const CirculantGraph& b,
                                     std::uint64_t budget = kDefaultOracleBudget) {
  if (a.order() != b.order()) throw OrderMismatchError("oracle graphs have different orders");
  OracleVerdict out;
  if (a == b) {
    out.result = OracleResult::Isomorphic;
    out.permutation = VertexPermutation::identity(a.order());
    out.distinguisher = "identity";
    return out;
  }
  if (a.degree() != b.degree()) {
    out.result = OracleResult::NonIsomorphic;
    out.distinguisher = "degree";
    return out;
  }
  if (!spectra_equal(a, b)) {
    out.result = OracleResult::NonIsomorphic;
    out.distinguisher = "spectrum";
    return out;
  }
  detail::IsoSearch search(a, b, budget);
  bool timed_out = false;
  auto perm = search.run(timed_out);
  out.expansions = search.expansions();
  if (perm) {
    if (!verify_certificate(a, b, *perm)) throw std::logic_error("oracle produced an invalid permutation");
    out.result = OracleResult::Isomorphic;
    out.permutation = std::move(perm);
    out.distinguisher = "search";
  } else if (timed_out) {
    out.result = OracleResult::Timeout;
    out.distinguisher = "budget";
  } else {
    out.result = OracleResult::NonIsomorphic;
    out.distinguisher = search.refinement_failed() ? "refinement" : "exhausted";
  }
  return out;
}

}  // namespace circulant
