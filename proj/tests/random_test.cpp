// Copyright 2026 The sagq Authors
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

#include "sagq/sagq.hpp"

namespace sagq {
namespace {

TEST(GenRandomSagTest, DeterministicPerSeed) {
  RandomSagSpec spec{1, 5, 6, 0.3};
  EXPECT_EQ(gen_random_sag(spec), gen_random_sag(spec));
  RandomSagSpec other{2, 5, 6, 0.3};
  EXPECT_NE(gen_random_sag(spec), gen_random_sag(other));
}

TEST(GenRandomSagTest, OutputsAreSagAndFinite) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::size_t const n = 2 + seed % 6;
    RandomSagSpec spec{seed, n, seed % (n + 3), 0.1 * static_cast<double>(seed % 10)};
    auto bq = gen_random_sag(spec);
    EXPECT_EQ(bq.num_vertices(), spec.num_vertices);
    EXPECT_EQ(bq.num_arrows(), spec.num_arrows);
    EXPECT_TRUE(classify(bq).is_sag) << seed;
    EXPECT_TRUE(is_finite_dimensional(bq)) << seed;
  }
}

TEST(GenRandomSagTest, NoArrows) {
  auto bq = gen_random_sag({3, 4, 0, 0.5});
  EXPECT_EQ(bq.num_arrows(), 0u);
  EXPECT_TRUE(classify(bq).is_sag);
}

TEST(GenRandomSagTest, UnsatisfiableBoundsExhaustBudget) {
  try {
    gen_random_sag({1, 1, 5, 0.3});
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GenerationExhausted);
  }
}

TEST(GenRandomStringTest, OutputsAreStringPairs) {
  bool saw_long = false;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto bq = gen_random_string_quiver({{seed, 4, 6, 0.2}, 0.5});
    EXPECT_TRUE(is_string_pair(bq));
    EXPECT_TRUE(is_finite_dimensional(bq));
    EXPECT_EQ(gen_random_string_quiver({{seed, 4, 6, 0.2}, 0.5}), bq);
    saw_long = saw_long || bq.max_relation_length() > 2;
  }
  EXPECT_TRUE(saw_long);
}

}  // namespace
}  // namespace sagq
