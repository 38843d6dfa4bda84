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

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "circulant/errors.hpp"
#include "circulant/residues.hpp"
#include "circulant/type1.hpp"
#include "support.hpp"

namespace circulant {
namespace {

using testing::as_vector;

JumpSet J(int n, std::initializer_list<std::int64_t> v) { return reflexive_reduce(n, v); }

TEST(AdamImage, Examples) {
  EXPECT_EQ(adam_image(J(48, {1, 4, 23}), 11), J(48, {4, 11, 13}));
  EXPECT_EQ(adam_image(J(48, {1, 3, 23}), 17), J(48, {3, 7, 17}));
  EXPECT_EQ(adam_image(J(48, {1, 3, 23}), 13), J(48, {9, 11, 13}));
  EXPECT_EQ(adam_image(J(30, {2, 5, 9}), 1), J(30, {2, 5, 9}));
  EXPECT_THROW(adam_image(J(48, {1, 2}), 2), NotAUnitError);
}

TEST(AdamOrbit, Examples) {
  std::vector<JumpSet> h1{J(48, {1, 2, 23}), J(48, {5, 10, 19}), J(48, {7, 14, 17}), J(48, {11, 13, 22})};
  EXPECT_EQ(adam_orbit(J(48, {1, 2, 23})).members, h1);
  std::vector<JumpSet> x1{J(48, {1, 6, 23}), J(48, {5, 18, 19}), J(48, {6, 7, 17}), J(48, {11, 13, 18})};
  EXPECT_EQ(adam_orbit(J(48, {1, 6, 23})).members, x1);
  EXPECT_EQ(adam_orbit(J(81, {1, 26, 27, 28})).size(), 9u);
  EXPECT_EQ(adam_orbit(J(2, {1})).size(), 1u);
  EXPECT_EQ(adam_orbit(J(20, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10})).size(), 1u);
}

TEST(AdamOrbit, MatchesNaiveOrbit) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const int n = testing::uniform(rng, 3, 150);
    const auto jumps = testing::random_jumps(rng, n, testing::uniform(rng, 1, 4));
    const auto orbit = adam_orbit(reflexive_reduce(n, jumps));
    std::set<std::vector<int>> got;
    for (const auto& m : orbit.members) got.insert(as_vector(m));
    ASSERT_EQ(got, testing::naive_orbit(n, jumps)) << n;
    ASSERT_EQ(units(n).elements.size() % orbit.size(), 0u);
  }
}

TEST(SameOrbit, Examples) {
  EXPECT_EQ(same_orbit(J(48, {1, 2, 23}), J(48, {11, 13, 22})), 11);
  EXPECT_EQ(same_orbit(J(48, {1, 2, 23}), J(48, {2, 11, 13})), std::nullopt);
  EXPECT_EQ(same_orbit(J(48, {1, 2, 23}), J(48, {1, 2, 23})), 1);
  EXPECT_EQ(same_orbit(J(2, {1}), J(2, {1})), 1);
  EXPECT_THROW(same_orbit(J(48, {1, 2, 23}), J(96, {1, 2, 23})), OrderMismatchError);
}

TEST(SameOrbit, ReturnsLeastUnit) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    const int n = testing::uniform(rng, 3, 100);
    const auto r = reflexive_reduce(n, testing::random_jumps(rng, n, testing::uniform(rng, 1, 4)));
    const auto u = units(n).elements;
    const int x = u[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(u.size()) - 1))];
    const auto s = adam_image(r, x);
    const auto w = same_orbit(r, s);
    ASSERT_TRUE(w.has_value());
    ASSERT_LE(*w, x);
    ASSERT_EQ(adam_image(r, *w), s);
    for (const int y : u) {
      if (y >= *w) break;
      ASSERT_NE(adam_image(r, y), s);
    }
  }
}

}  // namespace
}  // namespace circulant
