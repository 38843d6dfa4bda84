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
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "circulant/errors.hpp"
#include "circulant/jump_set.hpp"
#include "circulant/residues.hpp"
#include "circulant/type1.hpp"
#include "circulant/type2.hpp"

namespace circulant {

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

/// Streams every k-subset of [1, n/2] once, in lexicographic order.
class JumpSetStream {
 public:
  JumpSetStream(int n, int k) : n_(n), half_(n / 2) {
    if (n < 2) throw RangeError("order must be at least 2");
    if (k < 1 || k > half_) {
      throw RangeError("jump-set size k = " + std::to_string(k) + " outside [1, " +
                       std::to_string(half_) + "]");
    }
    current_.resize(static_cast<std::size_t>(k));
    std::iota(current_.begin(), current_.end(), 1);
  }

  std::optional<JumpSet> next() {
    if (done_) return std::nullopt;
    JumpSet out = detail::make_jump_set(n_, current_);
    advance();
    return out;
  }

 private:
  void advance() {
    const int k = static_cast<int>(current_.size());
    int i = k - 1;
    while (i >= 0 && current_[i] == half_ - (k - 1 - i)) --i;
    if (i < 0) {
      done_ = true;
      return;
    }
    ++current_[i];
    for (int j = i + 1; j < k; ++j) current_[j] = current_[j - 1] + 1;
  }

  int n_;
  int half_;
  std::vector<int> current_;
  bool done_ = false;
};

inline std::vector<JumpSet> enumerate_jumpsets(int n, int k) {
  JumpSetStream stream(n, k);
  std::vector<JumpSet> out;
  out.reserve(binomial(n / 2, k));
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

/// Position of a k-subset of [1, h] in lexicographic order.
class SubsetRanker {
 public:
  SubsetRanker(int h, int k) : h_(h), k_(k) {}

  std::size_t rank(std::span<const int> jumps) const {
    std::size_t r = 0;
    int prev = 0;
    for (int i = 0; i < k_; ++i) {
      for (int v = prev + 1; v < jumps[i]; ++v) r += binomial(h_ - v, k_ - i - 1);
      prev = jumps[i];
    }
    return r;
  }

 private:
  int h_;
  int k_;
};

/// One theta witness: theta_{n,m,t}(from) = to.
struct Type2Link {
  JumpSet from;
  JumpSet to;
  int m;
  int t;
  friend bool operator==(const Type2Link&, const Type2Link&) = default;
};

/// A connected group of jump sets joined by theta witnesses, no two of which
/// share an Adam orbit.
struct Type2Class {
  int n = 0;
  std::vector<JumpSet> members;  // ascending
  std::vector<Type2Link> links;  // ascending by (from, to)
};

struct EnumerationStats {
  std::uint64_t jumpsets = 0;
  std::uint64_t theta_evaluations = 0;
  std::uint64_t circulant_images = 0;
  std::uint64_t links = 0;
  double elapsed_ms = 0.0;
};

struct EnumerationReport {
  int n = 0;
  int k = 0;
  std::size_t orbit_count = 0;
  std::vector<Type2Class> type2_classes;
  std::size_t pair_count = 0;
  std::size_t triple_count = 0;
  std::map<std::size_t, std::size_t> class_sizes;  // size -> number of classes
  std::vector<int> m_values;                       // every m appearing in a link
  EnumerationStats stats;
};

struct EnumerationOptions {
  int workers = 1;
  // Visits jump sets in a shuffled order; results must not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

namespace detail {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

struct RawLink {
  std::size_t from;
  std::size_t to;
  int m;
  int t;
};

}  // namespace detail

/// Exhaustive Type-2 search over all k-subsets of [1, n/2].
///
/// Every jump set is pushed through each admissible theta_{n,m,t}; an image
/// that is circulant and lies outside the Adam orbit of its source becomes a
/// link. Classes are the connected components of the link graph; a class of
/// two is a Type-2 pair, a class of three a triple. Between any unordered pair
/// only the link with least (m, t, from) is kept.
inline EnumerationReport enumerate_type2(int n, int k, const EnumerationOptions& opts = {}) {
  if (k < 3) throw RangeError("Type-2 enumeration needs k >= 3, got " + std::to_string(k));
  const auto start = std::chrono::steady_clock::now();
  const std::vector<JumpSet> sets = enumerate_jumpsets(n, k);
  const SubsetRanker ranker(n / 2, k);
  const UnitGroup unit_group = units(n);

  EnumerationReport report;
  report.n = n;
  report.k = k;
  report.stats.jumpsets = sets.size();

  // Orbit partition: orbit id of each set, ids assigned in lexicographic
  // order of representatives.
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit_of(sets.size(), kUnassigned);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (orbit_of[i] != kUnassigned) continue;
    for (const JumpSet& member : adam_orbit(sets[i], unit_group).members) {
      orbit_of[ranker.rank(member.jumps())] = report.orbit_count;
    }
    ++report.orbit_count;
  }

  std::vector<std::size_t> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  if (opts.shuffle_seed) {
    std::mt19937_64 rng(*opts.shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  const int workers = std::max(1, opts.workers);
  std::vector<std::vector<detail::RawLink>> found(static_cast<std::size_t>(workers));
  std::atomic<std::uint64_t> evaluations{0};
  std::atomic<std::uint64_t> circulant_images{0};
  auto scan = [&](int w) {
    std::uint64_t local_evals = 0;
    std::uint64_t local_images = 0;
    for (std::size_t pos = static_cast<std::size_t>(w); pos < order.size(); pos += workers) {
      const std::size_t idx = order[pos];
      const JumpSet& r = sets[idx];
      for (const int m : valid_m_values(r)) {
        for (int t = 1; t <= n / m - 1; ++t) {
          ++local_evals;
          const auto image = theta_image_periodic(r, ThetaParams(n, m, t));
          if (!image) continue;
          ++local_images;
          if (image->size() != r.size()) continue;
          const std::size_t target = ranker.rank(image->jumps());
          if (orbit_of[target] == orbit_of[idx]) continue;
          found[w].push_back({idx, target, m, t});
        }
      }
    }
    evaluations += local_evals;
    circulant_images += local_images;
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& th : pool) th.join();
  }

  // Deterministic merge: best witness per unordered pair.
  std::map<std::pair<std::size_t, std::size_t>, detail::RawLink> best;
  for (const auto& bucket : found) {
    for (const auto& l : bucket) {
      const auto key = std::minmax(l.from, l.to);
      auto it = best.find(key);
      const auto better = [](const detail::RawLink& a, const detail::RawLink& b) {
        return std::tie(a.m, a.t, a.from) < std::tie(b.m, b.t, b.from);
      };
      if (it == best.end()) best.emplace(key, l);
      else if (better(l, it->second)) it->second = l;
    }
  }

  detail::UnionFind uf(sets.size());
  for (const auto& [key, l] : best) uf.unite(l.from, l.to);

  std::map<std::size_t, Type2Class> by_root;
  for (const auto& [key, l] : best) {
    Type2Class& c = by_root[uf.find(l.from)];
    c.n = n;
    c.links.push_back({sets[l.from], sets[l.to], l.m, l.t});
  }
  for (auto& [root, c] : by_root) {
    for (const Type2Link& l : c.links) {
      c.members.push_back(l.from);
      c.members.push_back(l.to);
    }
    std::sort(c.members.begin(), c.members.end());
    c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    std::sort(c.links.begin(), c.links.end(), [](const Type2Link& a, const Type2Link& b) {
      return std::tie(a.from, a.to, a.m, a.t) < std::tie(b.from, b.to, b.m, b.t);
    });
    for (const Type2Link& l : c.links) report.m_values.push_back(l.m);
    report.type2_classes.push_back(std::move(c));
  }
  std::sort(report.type2_classes.begin(), report.type2_classes.end(),
            [](const Type2Class& a, const Type2Class& b) { return a.members.front() < b.members.front(); });
  std::sort(report.m_values.begin(), report.m_values.end());
  report.m_values.erase(std::unique(report.m_values.begin(), report.m_values.end()), report.m_values.end());

  for (const Type2Class& c : report.type2_classes) {
    ++report.class_sizes[c.members.size()];
    if (c.members.size() == 2) ++report.pair_count;
    if (c.members.size() == 3) ++report.triple_count;
  }
  report.stats.theta_evaluations = evaluations.load();
  report.stats.circulant_images = circulant_images.load();
  report.stats.links = best.size();
  report.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// A pair or triple claimed in a reference table.
struct Type2Claim {
  std::string label;
  std::vector<JumpSet> members;  // ascending
};

struct CrossCheckResult {
  std::vector<std::string> matching;         // claim labels found by the enumeration
  std::vector<std::string> fixture_only;     // claim labels the enumeration did not find
  std::vector<std::vector<JumpSet>> enumeration_only;  // classes no claim names
  std::size_t duplicate_claims = 0;          // claims naming an already-matched class
};

/// Three-way diff between enumerated classes and claimed ones, matching on
/// the exact member sets.
inline CrossCheckResult cross_check(const EnumerationReport& report, const std::vector<Type2Claim>& claims) {
  CrossCheckResult out;
  std::map<std::vector<JumpSet>, bool> classes;
  for (const Type2Class& c : report.type2_classes) classes.emplace(c.members, false);
  for (const Type2Claim& claim : claims) {
    std::vector<JumpSet> key = claim.members;
    std::sort(key.begin(), key.end());
    auto it = classes.find(key);
    if (it == classes.end()) {
      out.fixture_only.push_back(claim.label);
    } else {
      if (it->second) ++out.duplicate_claims;
      it->second = true;
      out.matching.push_back(claim.label);
    }
  }
  for (const auto& [members, matched] : classes) {
    if (!matched) out.enumeration_only.push_back(members);
  }
  return out;
}

}  // namespace circulant
