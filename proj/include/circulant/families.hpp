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

#include <cstdint>
#include <string>
#include <vector>

#include "circulant/errors.hpp"
#include "circulant/graph.hpp"
#include "circulant/residues.hpp"
#include "circulant/type1.hpp"
#include "circulant/type2.hpp"

namespace circulant {

// Pairs over Z_{8n}:
//   R = {2, 2s-1, 4n-(2s-1)},  S = {2, 2n-(2s-1), 2n+2s-1}
// related by theta_{8n,2,n} and theta_{8n,2,3n} in both directions. The two
// sets coincide when n = 2s - 1.
struct Family8nInstance {
  int n;
  int s;
  JumpSet r;
  JumpSet s_set;

  int order() const noexcept { return 8 * n; }
  bool degenerate() const noexcept { return r == s_set; }
};

inline Family8nInstance family_8n(int n, int s) {
  if (n < 2) throw RangeError("family_8n needs n >= 2, got " + std::to_string(n));
  const int odd = 2 * s - 1;
  if (odd < 1 || odd > 2 * n - 1) {
    throw RangeError("family_8n needs 1 <= 2s-1 <= 2n-1, got s = " + std::to_string(s));
  }
  const int order = 8 * n;
  return {n, s, reflexive_reduce(order, {2, odd, 4 * n - odd}),
          reflexive_reduce(order, {2, 2 * n - odd, 2 * n + odd})};
}

struct Family8nCheck {
  bool forward_n = false;   // theta_{8n,2,n}(R) = S
  bool forward_3n = false;  // theta_{8n,2,3n}(R) = S
  bool reverse_n = false;   // theta_{8n,2,n}(S) = R
  bool reverse_3n = false;  // theta_{8n,2,3n}(S) = R
  bool outside_orbit = false;
  bool degenerate = false;

  bool passed() const {
    return forward_n && forward_3n && reverse_n && reverse_3n && (degenerate || outside_orbit);
  }
};

inline Family8nCheck check_family_8n(const Family8nInstance& inst) {
  const int order = inst.order();
  const CirculantGraph gr(inst.r);
  const CirculantGraph gs(inst.s_set);
  const ThetaParams at_n(order, 2, inst.n);
  const ThetaParams at_3n(order, 2, 3 * inst.n);
  Family8nCheck c;
  c.forward_n = theta_image(gr, at_n) == inst.s_set;
  c.forward_3n = theta_image(gr, at_3n) == inst.s_set;
  c.reverse_n = theta_image(gs, at_n) == inst.r;
  c.reverse_3n = theta_image(gs, at_3n) == inst.r;
  c.degenerate = inst.degenerate();
  c.outside_orbit = !c.degenerate && !same_orbit(inst.r, inst.s_set).has_value();
  return c;
}

inline bool verify_family_8n(const Family8nInstance& inst) { return check_family_8n(inst).passed(); }

// Over Z_{np^3}, p an odd prime:
//   d_i = (i-1) x p n + x + y p
//   R_i = {p, d_i, np^2 -+ d_i, 2np^2 -+ d_i, ..., (p-1)np^2 -+ d_i, np^3 - d_i, np^3 - p}
// theta_{np^3,p,jn} carries R_i to R_{i+j}, indices taken mod p in [1, p].
struct FamilyNp3Instance {
  int n;
  int p;
  int x;
  int y;
  int i;
  std::int64_t d;
  std::vector<std::int64_t> listed;  // the 2p + 2 raw entries before reduction
  JumpSet r;

  int order() const noexcept { return n * p * p * p; }
  // d and k np^2 + d fold onto p distinct jumps, plus p itself.
  bool collapsed() const noexcept { return r.size() != static_cast<std::size_t>(p) + 1; }
};

inline bool is_prime(int v) {
  if (v < 2) return false;
  for (int q = 2; q * q <= v; ++q) {
    if (v % q == 0) return false;
  }
  return true;
}

inline FamilyNp3Instance family_np3(int n, int p, int x, int y, int i) {
  if (n < 1) throw RangeError("family_np3 needs n >= 1");
  if (p < 3 || !is_prime(p)) throw RangeError("family_np3 needs an odd prime p, got " + std::to_string(p));
  if (x < 1 || x > p - 1) throw RangeError("x = " + std::to_string(x) + " outside [1, p-1]");
  if (y < 0 || y > n * p - 1) throw RangeError("y = " + std::to_string(y) + " outside [0, np-1]");
  if (i < 1 || i > p) throw RangeError("i = " + std::to_string(i) + " outside [1, p]");
  const std::int64_t np2 = static_cast<std::int64_t>(n) * p * p;
  if (x + static_cast<std::int64_t>(y) * p > np2 - 1) {
    throw RangeError("x + yp exceeds np^2 - 1");
  }
  const int order = n * p * p * p;
  const std::int64_t d = static_cast<std::int64_t>(i - 1) * x * p * n + x + static_cast<std::int64_t>(y) * p;

  std::vector<std::int64_t> listed{p, d};
  for (int k = 1; k <= p - 1; ++k) {
    listed.push_back(k * np2 - d);
    listed.push_back(k * np2 + d);
  }
  listed.push_back(order - d);
  listed.push_back(order - p);

  JumpSet r = reflexive_reduce(order, std::span<const std::int64_t>(listed));
  return {n, p, x, y, i, d, std::move(listed), std::move(r)};
}

struct FamilyNp3Check {
  int action_failures = 0;  // (i, j) with theta_{np^3,p,jn}(R_i) != R_{i+j}
  int orbit_collisions = 0; // pairs i < j with R_j in Ad(R_i)
  int collapsed = 0;        // instances whose reduced size is not p + 1

  bool passed() const { return action_failures == 0 && orbit_collisions == 0; }
};

inline FamilyNp3Check check_family_np3(int n, int p, int x, int y) {
  std::vector<FamilyNp3Instance> sets;
  for (int i = 1; i <= p; ++i) sets.push_back(family_np3(n, p, x, y, i));
  const int order = sets.front().order();
  FamilyNp3Check c;
  for (int i = 1; i <= p; ++i) {
    if (sets[i - 1].collapsed()) ++c.collapsed;
    const CirculantGraph g(sets[i - 1].r);
    for (int j = 1; j <= p; ++j) {
      const int target = (i + j) % p == 0 ? p : (i + j) % p;
      if (theta_image(g, ThetaParams(order, p, j * n)) != sets[target - 1].r) ++c.action_failures;
    }
  }
  for (int i = 0; i < p; ++i) {
    const AdamOrbit orbit = adam_orbit(sets[i].r);
    for (int j = i + 1; j < p; ++j) {
      if (orbit.contains(sets[j].r)) ++c.orbit_collisions;
    }
  }
  return c;
}

inline bool verify_family_np3(int n, int p, int x, int y) { return check_family_np3(n, p, x, y).passed(); }

}  // namespace circulant
