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
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "circulant/errors.hpp"
#include "circulant/jump_set.hpp"

namespace circulant {

/// Least non-negative residue of `value` modulo `n`.
constexpr int residue(std::int64_t value, int n) noexcept {
  const std::int64_t r = value % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// Residue folded into [0, n/2]: r and n - r name the same undirected jump.
constexpr int reflect(std::int64_t value, int n) noexcept {
  const int r = residue(value, n);
  return r > n / 2 ? n - r : r;
}

/// Reflexive modular reduction: reduce every value mod n, fold values above
/// n/2 onto n - r, drop duplicates and sort.
///
/// Throws ZeroJumpError if any value is a multiple of n, and RangeError for
/// n < 2 or an empty input.
inline JumpSet reflexive_reduce(int n, std::span<const std::int64_t> values) {
  if (n < 2) throw RangeError("modulus must be at least 2, got " + std::to_string(n));
  if (values.empty()) throw RangeError("jump list is empty");
  std::vector<int> jumps;
  jumps.reserve(values.size());
  for (const std::int64_t v : values) {
    const int r = reflect(v, n);
    if (r == 0) {
      throw ZeroJumpError("jump " + std::to_string(v) + " is 0 modulo " +
                          std::to_string(n));
    }
    jumps.push_back(r);
  }
  std::sort(jumps.begin(), jumps.end());
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
  return detail::make_jump_set(n, std::move(jumps));
}

inline JumpSet reflexive_reduce(int n, std::initializer_list<std::int64_t> values) {
  return reflexive_reduce(n, std::span<const std::int64_t>(values.begin(), values.size()));
}

inline JumpSet reflexive_reduce(int n, const std::vector<int>& values) {
  std::vector<std::int64_t> wide(values.begin(), values.end());
  return reflexive_reduce(n, std::span<const std::int64_t>(wide));
}

/// The multiplicative group of units of Z_n, listed in ascending order.
struct UnitGroup {
  int n = 0;
  std::vector<int> elements;

  bool contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), residue(x, n));
  }
};

inline bool is_unit(std::int64_t x, int n) noexcept {
  return std::gcd(static_cast<std::int64_t>(residue(x, n)), static_cast<std::int64_t>(n)) == 1;
}

inline UnitGroup units(int n) {
  if (n < 2) throw RangeError("modulus must be at least 2, got " + std::to_string(n));
  UnitGroup g{n, {}};
  for (int x = 1; x < n; ++x) {
    if (std::gcd(x, n) == 1) g.elements.push_back(x);
  }
  return g;
}

/// Every m > 1 with m^3 | n that also divides gcd(n, r) for some r in R.
inline std::vector<int> valid_m_values(const JumpSet& r) {
  const int n = r.order();
  std::vector<int> out;
  for (int m = 2; static_cast<std::int64_t>(m) * m * m <= n; ++m) {
    if (n % (m * m * m) != 0) continue;
    const auto jumps = r.jumps();
    if (std::any_of(jumps.begin(), jumps.end(),
                    [m](int j) { return j % m == 0; })) {
      out.push_back(m);
    }
  }
  return out;
}

}  // namespace circulant
