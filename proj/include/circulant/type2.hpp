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
#include <tuple>
#include <type_traits>
#include <variant>
#include <vector>

#include "circulant/errors.hpp"
#include "circulant/graph.hpp"
#include "circulant/jump_set.hpp"
#include "circulant/permutation.hpp"
#include "circulant/residues.hpp"
#include "circulant/type1.hpp"

namespace circulant {

/// Names one block relabeling theta_{n,m,t}. Requires m > 1, m^3 | n and
/// 0 <= t < n/m; t = 0 is the identity.
class ThetaParams {
 public:
  ThetaParams(int n, int m, int t) : n_(n), m_(m), t_(t) {
    if (m < 2) throw RangeError("block modulus m must exceed 1, got " + std::to_string(m));
    if (n < 1 || n % (m * m * m) != 0) {
      throw RangeError("m^3 = " + std::to_string(m * m * m) + " does not divide n = " +
                       std::to_string(n));
    }
    if (t < 0 || t > n / m - 1) {
      throw RangeError("shift index t = " + std::to_string(t) + " outside [0, " +
                       std::to_string(n / m - 1) + "]");
    }
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int t() const noexcept { return t_; }

  // x + (x mod m) t m, mod n.
  int apply(int x) const noexcept {
    return residue(x + static_cast<std::int64_t>(x % m_) * t_ * m_, n_);
  }
  // x mod m is preserved by apply, which makes the inverse a one-liner.
  int unapply(int u) const noexcept {
    return residue(u - static_cast<std::int64_t>(u % m_) * t_ * m_, n_);
  }

  friend bool operator==(const ThetaParams&, const ThetaParams&) = default;

 private:
  int n_, m_, t_;
};

inline VertexPermutation theta_permutation(const ThetaParams& p) {
  std::vector<int> image(static_cast<std::size_t>(p.n()));
  for (int x = 0; x < p.n(); ++x) image[x] = p.apply(x);
  return VertexPermutation(std::move(image));
}

/// Relabels every edge of g by theta and reads the result back as a
/// circulant. nullopt when the image is not rotation invariant.
inline std::optional<JumpSet> theta_image(const CirculantGraph& g, const ThetaParams& p) {
  if (p.n() != g.order()) throw OrderMismatchError("theta order differs from graph order");
  return circulant_jumps_of(edges(g).relabeled(theta_permutation(p)));
}

/// Same result as theta_image, computed from the neighbourhoods of the image
/// vertices 0..m-1 only.
///
/// theta commutes with v -> v + m, so the image graph is m-periodic; it is
/// rotation invariant iff the offset sets N(u) - u agree for u in [0, m).
inline std::optional<JumpSet> theta_image_periodic(const JumpSet& r, const ThetaParams& p) {
  const int n = p.n();
  if (r.order() != n) throw OrderMismatchError("theta order differs from jump set order");
  std::vector<int> first;
  std::vector<int> offsets;
  offsets.reserve(2 * r.size());
  for (int u = 0; u < p.m(); ++u) {
    const int x = p.unapply(u);
    offsets.clear();
    for (const int j : r.jumps()) {
      offsets.push_back(residue(p.apply(residue(x + j, n)) - u, n));
      offsets.push_back(residue(p.apply(residue(x - j, n)) - u, n));
    }
    std::sort(offsets.begin(), offsets.end());
    offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
    if (u == 0) {
      first = offsets;
    } else if (offsets != first) {
      return std::nullopt;
    }
  }
  std::vector<int> jumps;
  for (const int d : first) {
    if (d <= n / 2) jumps.push_back(d);
  }
  return detail::make_jump_set(n, std::move(jumps));
}

/// True iff `perm` maps the edge set of a bijectively onto that of b.
inline bool verify_certificate(const CirculantGraph& a, const CirculantGraph& b,
                               const VertexPermutation& perm) {
  if (a.order() != b.order() || perm.order() != a.order()) return false;
  return edges(a).relabeled(perm) == edges(b);
}

/// Carries a certificate between C_n(R) and C_n(S) to one between
/// C_kn(kR) and C_kn(kS): vertex kx + c goes to k perm(x) + c.
inline VertexPermutation lift_permutation(const VertexPermutation& perm, int k) {
  if (k < 1) throw RangeError("lift factor must be positive");
  const int n = perm.order();
  std::vector<int> image(static_cast<std::size_t>(n) * k);
  for (int v = 0; v < n * k; ++v) image[v] = k * perm(v / k) + v % k;
  return VertexPermutation(std::move(image));
}

namespace verdict {
struct Identical {
  friend bool operator==(const Identical&, const Identical&) = default;
};
struct Type1 {
  int unit;
  friend bool operator==(const Type1&, const Type1&) = default;
};
struct Type2 {
  int m;
  int t;
  VertexPermutation certificate;
  friend bool operator==(const Type2&, const Type2&) = default;
};
// Neither unit multiplication nor any theta relates the sets. This is not a
// proof of non-isomorphism.
struct Unresolved {
  friend bool operator==(const Unresolved&, const Unresolved&) = default;
};
}  // namespace verdict

using Verdict = std::variant<verdict::Identical, verdict::Type1, verdict::Type2, verdict::Unresolved>;

struct ClassificationRecord {
  int n;
  JumpSet r;
  JumpSet s;
  Verdict verdict;

  bool resolved() const { return !std::holds_alternative<verdict::Unresolved>(verdict); }
};

inline const char* verdict_name(const Verdict& v) {
  return std::visit(
      [](const auto& x) -> const char* {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, verdict::Identical>) return "Identical";
        else if constexpr (std::is_same_v<T, verdict::Type1>) return "Type1";
        else if constexpr (std::is_same_v<T, verdict::Type2>) return "Type2";
        else return "Unresolved";
      },
      v);
}

/// Least (m, t) in lexicographic order with theta_{n,m,t}(C_n(R)) = C_n(S),
/// t in [1, n/m - 1]. Requires |R| >= 3.
inline std::optional<ThetaParams> find_theta(const JumpSet& r, const JumpSet& s) {
  if (r.size() < 3 || r.size() != s.size()) return std::nullopt;
  const int n = r.order();
  const CirculantGraph g(r);
  for (const int m : valid_m_values(r)) {
    for (int t = 1; t <= n / m - 1; ++t) {
      const ThetaParams p(n, m, t);
      const auto image = theta_image(g, p);
      if (image && *image == s) return p;
    }
  }
  return std::nullopt;
}

/// Identical, else Type-1 (least unit), else Type-2 (least (m, t)), else
/// Unresolved. Type-2 requires S outside the Adam orbit of R, which holds
/// automatically once the Type-1 test has failed.
inline ClassificationRecord classify(int n, const JumpSet& r, const JumpSet& s) {
  if (r.order() != n || s.order() != n) {
    throw OrderMismatchError("jump sets were normalized for orders " + std::to_string(r.order()) +
                             " and " + std::to_string(s.order()) + ", expected " +
                             std::to_string(n));
  }
  if (r == s) return {n, r, s, verdict::Identical{}};
  if (r.size() != s.size()) return {n, r, s, verdict::Unresolved{}};
  if (const auto x = same_orbit(r, s)) return {n, r, s, verdict::Type1{*x}};
  if (const auto p = find_theta(r, s)) {
    return {n, r, s, verdict::Type2{p->m(), p->t(), theta_permutation(*p)}};
  }
  return {n, r, s, verdict::Unresolved{}};
}

struct Type2Partner {
  JumpSet s;
  int m;
  int t;
  friend bool operator==(const Type2Partner&, const Type2Partner&) = default;
};

/// Every S != R outside Ad_n(R) reached by some theta_{n,m,t}, t >= 1, with
/// the least (m, t) kept per S. Ordered by (m, t).
inline std::vector<Type2Partner> type2_partners(const JumpSet& r) {
  if (r.size() < 3) {
    throw RangeError("Type-2 search needs at least 3 jumps, got " + std::to_string(r.size()));
  }
  const int n = r.order();
  std::vector<Type2Partner> out;
  std::optional<AdamOrbit> orbit;
  for (const int m : valid_m_values(r)) {
    for (int t = 1; t <= n / m - 1; ++t) {
      auto image = theta_image_periodic(r, ThetaParams(n, m, t));
      if (!image || *image == r || image->size() != r.size()) continue;
      if (!orbit) orbit = adam_orbit(r);
      if (orbit->contains(*image)) continue;
      const bool seen = std::any_of(out.begin(), out.end(),
                                    [&](const Type2Partner& p) { return p.s == *image; });
      if (!seen) out.push_back({std::move(*image), m, t});
    }
  }
  return out;
}

}  // namespace circulant
