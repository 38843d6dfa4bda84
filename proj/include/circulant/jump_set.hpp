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
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace circulant {

class JumpSet;

namespace detail {
JumpSet make_jump_set(int order, std::vector<int> sorted_unique_jumps);
}  // namespace detail

/// Normalized connection set of a circulant graph C_n(R).
///
/// Jumps are strictly ascending and lie in [1, n/2]. Instances are only
/// produced by reflexive_reduce (or helpers built on it), so every JumpSet in
/// circulation is canonical: two jump sets describe the same graph iff they
/// compare equal.
class JumpSet {
 public:
  int order() const noexcept { return order_; }
  std::span<const int> jumps() const noexcept { return jumps_; }
  std::size_t size() const noexcept { return jumps_.size(); }

  bool contains(int r) const noexcept {
    return std::binary_search(jumps_.begin(), jumps_.end(), r);
  }

  // n/2 contributes a single edge per vertex.
  bool has_diameter_jump() const noexcept {
    return order_ % 2 == 0 && !jumps_.empty() && jumps_.back() == order_ / 2;
  }

  int degree() const noexcept {
    return 2 * static_cast<int>(jumps_.size()) - (has_diameter_jump() ? 1 : 0);
  }

  // "1,2,23"
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < jumps_.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(jumps_[i]);
    }
    return out;
  }

  friend bool operator==(const JumpSet&, const JumpSet&) = default;
  friend std::strong_ordering operator<=>(const JumpSet& a,
                                          const JumpSet& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.jumps_.begin(), a.jumps_.end(), b.jumps_.begin(), b.jumps_.end());
  }

 private:
  friend JumpSet detail::make_jump_set(int, std::vector<int>);
  JumpSet(int order, std::vector<int> jumps)
      : order_(order), jumps_(std::move(jumps)) {}

  int order_ = 0;
  std::vector<int> jumps_;
};

namespace detail {
inline JumpSet make_jump_set(int order, std::vector<int> sorted_unique_jumps) {
  return JumpSet(order, std::move(sorted_unique_jumps));
}
}  // namespace detail

}  // namespace circulant
