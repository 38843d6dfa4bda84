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
#include <variant>
#include <vector>

#include "circulant/errors.hpp"
#include "circulant/graph.hpp"
#include "circulant/type2.hpp"
#include "support.hpp"

namespace circulant {
namespace {

using testing::as_vector;

JumpSet J(int n, std::initializer_list<std::int64_t> v) { return reflexive_reduce(n, v); }

TEST(ThetaParams, Validation) {
  EXPECT_NO_THROW(ThetaParams(48, 2, 23));
  EXPECT_THROW(ThetaParams(48, 1, 0), RangeError);
  EXPECT_THROW(ThetaParams(48, 3, 0), RangeError);  // 27 does not divide 48
  EXPECT_THROW(ThetaParams(48, 2, 24), RangeError);
  EXPECT_THROW(ThetaParams(48, 2, -1), RangeError);
}

TEST(ThetaPermutation, Examples) {
  const auto p = theta_permutation(ThetaParams(48, 2, 6));
  EXPECT_EQ(p(0), 0);
  EXPECT_EQ(p(1), 13);
  EXPECT_EQ(p(2), 2);
  EXPECT_EQ(p(3), 15);
  const auto q = theta_permutation(ThetaParams(81, 3, 3));
  EXPECT_EQ(q(1), 10);
  EXPECT_EQ(q(2), 20);
  EXPECT_EQ(q(3), 3);
}

TEST(ThetaImage, Examples) {
  EXPECT_EQ(theta_image(build_graph(48, {1, 2, 23}), ThetaParams(48, 2, 6)), J(48, {2, 11, 13}));
  EXPECT_EQ(theta_image(build_graph(96, {11, 2, 37}), ThetaParams(96, 2, 12)), J(96, {2, 13, 35}));
  EXPECT_EQ(theta_image(build_graph(81, {1, 3, 26, 28}), ThetaParams(81, 3, 3)), J(81, {3, 10, 17, 37}));
  EXPECT_EQ(theta_image(build_graph(81, {1, 3, 26, 28}), ThetaParams(81, 3, 6)), J(81, {3, 8, 19, 35}));
  EXPECT_EQ(theta_image(build_graph(48, {1, 2, 23}), ThetaParams(48, 2, 0)), J(48, {1, 2, 23}));
  // Jump 1 alone splits into differences 11 and 13, so no circulant results.
  EXPECT_EQ(theta_image(build_graph(48, {1}), ThetaParams(48, 2, 6)), std::nullopt);
  EXPECT_THROW(theta_image(build_graph(48, {1}), ThetaParams(96, 2, 6)), OrderMismatchError);
}

TEST(ThetaImage, MatchesNaiveOracle) {
  std::mt19937_64 rng(41);
  const int orders[] = {16, 24, 27, 32, 40, 48, 54, 56, 64, 72, 81, 96};
  for (int i = 0; i < 300; ++i) {
    const int n = orders[testing::uniform(rng, 0, 11)];
    const auto jumps = testing::random_jumps(rng, n, testing::uniform(rng, 1, 4));
    const auto r = reflexive_reduce(n, jumps);
    const int m = (n % 27 == 0) ? 3 : 2;
    const int t = testing::uniform(rng, 0, n / m - 1);
    const auto full = theta_image(CirculantGraph(r), ThetaParams(n, m, t));
    const auto expected = testing::naive_theta_image(n, m, t, jumps);
    if (expected.empty()) {
      ASSERT_FALSE(full.has_value());
    } else {
      ASSERT_TRUE(full.has_value());
      ASSERT_EQ(as_vector(*full), expected);
    }
    ASSERT_EQ(theta_image_periodic(r, ThetaParams(n, m, t)), full);
  }
}

TEST(VerifyCertificate, Examples) {
  const auto a = build_graph(48, {1, 2, 23});
  const auto b = build_graph(48, {2, 11, 13});
  EXPECT_TRUE(verify_certificate(a, b, theta_permutation(ThetaParams(48, 2, 6))));
  EXPECT_FALSE(verify_certificate(a, b, VertexPermutation::identity(48)));
  EXPECT_TRUE(verify_certificate(a, a, VertexPermutation::identity(48)));
  EXPECT_FALSE(verify_certificate(build_graph(8, {1}), build_graph(8, {2}), VertexPermutation::identity(8)));
  EXPECT_FALSE(verify_certificate(a, b, VertexPermutation::identity(47)));
}

TEST(LiftPermutation, ScalesCertificates) {
  const auto a = build_graph(16, {1, 2, 7});
  const auto b = build_graph(16, {2, 3, 5});
  const auto rec = classify(16, a.jumps(), b.jumps());
  ASSERT_TRUE(std::holds_alternative<verdict::Type2>(rec.verdict));
  const auto& cert = std::get<verdict::Type2>(rec.verdict).certificate;
  EXPECT_TRUE(verify_certificate(scale(3, a), scale(3, b), lift_permutation(cert, 3)));
  EXPECT_EQ(lift_permutation(cert, 1), cert);
  EXPECT_THROW(lift_permutation(cert, 0), RangeError);
}

TEST(Classify, Examples) {
  const auto h1 = classify(48, J(48, {1, 2, 23}), J(48, {2, 11, 13}));
  ASSERT_TRUE(std::holds_alternative<verdict::Type2>(h1.verdict));
  const auto& t2 = std::get<verdict::Type2>(h1.verdict);
  EXPECT_EQ(t2.m, 2);
  EXPECT_EQ(t2.t, 6);
  EXPECT_TRUE(verify_certificate(build_graph(48, {1, 2, 23}), build_graph(48, {2, 11, 13}), t2.certificate));

  const auto a1 = classify(48, J(48, {1, 4, 23}), J(48, {4, 11, 13}));
  ASSERT_TRUE(std::holds_alternative<verdict::Type1>(a1.verdict));
  EXPECT_EQ(std::get<verdict::Type1>(a1.verdict).unit, 11);

  EXPECT_TRUE(std::holds_alternative<verdict::Identical>(classify(48, J(48, {1, 2, 23}), J(48, {1, 2, 23})).verdict));
  EXPECT_THROW(classify(48, J(48, {1, 2, 23}), J(96, {1, 2, 23})), OrderMismatchError);
  EXPECT_FALSE(classify(48, J(48, {1, 2, 23}), J(48, {1, 2})).resolved());
}

TEST(Classify, SetsRelatedByThirteenAreType1) {
  // 13 * {1,3,23} = {13,39,299} = {9,11,13} (mod 48).
  const auto rec = classify(48, J(48, {1, 3, 23}), J(48, {9, 11, 13}));
  ASSERT_TRUE(std::holds_alternative<verdict::Type1>(rec.verdict));
  EXPECT_EQ(std::get<verdict::Type1>(rec.verdict).unit, 13);
}

TEST(Classify, UnresolvedWhenNeitherMechanismApplies) {
  for (const int s : {3, 9, 15, 21}) {
    const auto rec = classify(48, J(48, {1, s, 23}), J(48, {s, 11, 13}));
    EXPECT_TRUE(std::holds_alternative<verdict::Unresolved>(rec.verdict)) << s;
    EXPECT_STREQ(verdict_name(rec.verdict), "Unresolved");
  }
}

TEST(Type2Partners, Examples) {
  const auto p48 = type2_partners(J(48, {1, 2, 23}));
  ASSERT_EQ(p48.size(), 1u);
  EXPECT_EQ(p48[0], (Type2Partner{J(48, {2, 11, 13}), 2, 6}));

  const auto p81 = type2_partners(J(81, {1, 3, 26, 28}));
  EXPECT_NE(std::find(p81.begin(), p81.end(), Type2Partner{J(81, {3, 10, 17, 37}), 3, 3}), p81.end());
  EXPECT_NE(std::find(p81.begin(), p81.end(), Type2Partner{J(81, {3, 8, 19, 35}), 3, 6}), p81.end());
  EXPECT_EQ(p81.size(), 2u);

  EXPECT_TRUE(type2_partners(J(48, {1, 4, 23})).empty());
  EXPECT_THROW(type2_partners(J(48, {1, 2})), RangeError);
}

}  // namespace
}  // namespace circulant
