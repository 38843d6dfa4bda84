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
#include <optional>
#include <string>
#include <vector>

#include "circulant/errors.hpp"
#include "circulant/jump_set.hpp"
#include "circulant/residues.hpp"

namespace circulant {

/// reflexive_reduce(n, {x r : r in R}) for a unit x.
inline JumpSet adam_image(const JumpSet& r, int x) {
  const int n = r.order();
  if (!is_unit(x, n)) {
    throw NotAUnitError(std::to_string(x) + " is not a unit modulo " + std::to_string(n));
  }
  std::vector<int> out;
  out.reserve(r.size());
  for (const int j : r.jumps()) {
    out.push_back(reflect(static_cast<std::int64_t>(x) * j, n));
  }
  std::sort(out.begin(), out.end());
  return detail::make_jump_set(n, std::move(out));
}

/// Ad_n(C_n(R)): all unit multiples of R, sorted and deduplicated.
struct AdamOrbit {
  int n = 0;
  std::vector<JumpSet> members;

  bool contains(const JumpSet& s) const {
    return std::binary_search(members.begin(), members.end(), s);
  }
  const JumpSet& representative() const { return members.front(); }
  std::size_t size() const noexcept { return members.size(); }

  friend bool operator==(const AdamOrbit&, const AdamOrbit&) = default;
};

inline AdamOrbit adam_orbit(const JumpSet& r, const UnitGroup& u) {
  AdamOrbit orbit{r.order(), {}};
  orbit.members.reserve(u.elements.size());
  for (const int x : u.elements) orbit.members.push_back(adam_image(r, x));
  std::sort(orbit.members.begin(), orbit.members.end());
  orbit.members.erase(std::unique(orbit.members.begin(), orbit.members.end()),
                      orbit.members.end());
  return orbit;
}

inline AdamOrbit adam_orbit(const JumpSet& r) { return adam_orbit(r, units(r.order())); }

/// Least unit x with adam_image(r, x) == s, or nullopt if s is outside the
/// orbit of r.
inline std::optional<int> same_orbit(const JumpSet& r, const JumpSet& s) {
  if (r.order() != s.order()) {
    throw OrderMismatchError("jump sets normalized for orders " + std::to_string(r.order()) +
                             " and " + std::to_string(s.order()));
  }
  if (r.size() != s.size()) return std::nullopt;
  const int n = r.order();
  for (int x = 1; x <= std::max(1, n - 1); ++x) {
    if (!is_unit(x, n)) continue;
    if (adam_image(r, x) == s) return x;
  }
  return std::nullopt;
}

}  // namespace circulant
