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

#include <numeric>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sagq/sagq.hpp"

namespace sagq {
namespace {

BoundQuiver quiver(std::string const& text) { return parse_quiver(text); }

BoundQuiver single_arrow() {
  return quiver("quiver\nvertices: 1 2\narrows:\na: 1 -> 2\n");
}

TEST(BoundQuiverTest, FigureOneHasExpectedSize) {
  auto bq = oracle::load_fixture("fig1.quiver");
  EXPECT_EQ(bq.num_vertices(), 6u);
  EXPECT_EQ(bq.num_arrows(), 12u);
  EXPECT_EQ(bq.relations().size(), 18u);
}

TEST(BoundQuiverTest, SingleVertexWithoutArrows) {
  auto bq = quiver("quiver\nvertices: x\narrows:\n");
  EXPECT_EQ(bq.num_vertices(), 1u);
  EXPECT_EQ(bq.num_arrows(), 0u);
  EXPECT_TRUE(bq.relations().empty());
}

TEST(BoundQuiverTest, RejectsNonComposableRelation) {
  try {
    quiver("quiver\nvertices: 1 2 3\narrows:\na: 1 -> 2\nb: 3 -> 1\nrelations:\na b\n");
    FAIL() << "expected an error";
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonComposableRelation);
  }
}

TEST(BoundQuiverTest, RejectsShortRelation) {
  try {
    quiver("quiver\nvertices: 1 2\narrows:\na: 1 -> 2\nrelations:\na\n");
    FAIL() << "expected an error";
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RelationTooShort);
  }
}

TEST(BoundQuiverTest, RejectsDuplicatesAndDanglingEndpoints) {
  auto kind_of = [](std::string const& text) {
    try {
      parse_quiver(text);
    } catch (Error const& e) {
      return e.kind();
    }
    return ErrorKind::VerificationFailed;
  };
  EXPECT_EQ(kind_of("quiver\nvertices: 1 1\narrows:\n"), ErrorKind::DuplicateId);
  EXPECT_EQ(kind_of("quiver\nvertices: 1 2\narrows:\na: 1 -> 2\na: 2 -> 1\n"),
            ErrorKind::DuplicateId);
  EXPECT_EQ(kind_of("quiver\nvertices: 1 a\narrows:\na: 1 -> 1\n"), ErrorKind::DuplicateId);
  EXPECT_EQ(kind_of("quiver\nvertices: 1 2\narrows:\na: 1 -> 3\n"),
            ErrorKind::DanglingEndpoint);
}

TEST(BoundQuiverTest, NormalizesToFactorMinimalRelations) {
  auto bq = quiver(
      "quiver\nvertices: 1\narrows:\nl: 1 -> 1\nrelations:\nl l l\nl l\nl l\n");
  ASSERT_EQ(bq.relations().size(), 1u);
  EXPECT_EQ(bq.relations()[0].size(), 2u);
}

TEST(BoundQuiverTest, NormalizationIsIdempotent) {
  auto bq = oracle::load_fixture("fig1.quiver");
  EXPECT_EQ(normalize_relations(bq.relations()), bq.relations());
}

TEST(IdealTest, MembershipOnFigureOne) {
  auto bq = oracle::load_fixture("fig1.quiver");
  EXPECT_TRUE(in_ideal(bq, make_path(bq, std::vector<std::string>{"a", "b"})));
  EXPECT_FALSE(in_ideal(bq, trivial_path(bq.vertex_index("1"))));
  EXPECT_FALSE(in_ideal(bq, make_path(bq, std::vector<std::string>{"d", "a"})));
  EXPECT_TRUE(in_ideal(bq, make_path(bq, std::vector<std::string>{"c'", "d", "a"})));
}

TEST(IdealTest, RejectsInvalidPath) {
  auto bq = oracle::load_fixture("fig1.quiver");
  Path bad{0, {bq.arrow_index("a"), bq.arrow_index("a")}};
  EXPECT_THROW(in_ideal(bq, bad), Error);
}

TEST(IdealTest, AgreesWithSubstringSearch) {
  auto bq = oracle::load_fixture("fig1.quiver");
  for (VertexIndex v = 0; v < bq.num_vertices(); ++v) {
    for (VertexIndex w = 0; w < bq.num_vertices(); ++w) {
      for (auto const& p : enumerate_paths(bq, v, w)) {
        EXPECT_FALSE(oracle::in_ideal(bq, p.arrows));
        for (ArrowIndex a : bq.out_arrows(w)) {
          auto q = p.arrows;
          q.push_back(a);
          EXPECT_EQ(in_ideal(bq, Path{v, q}), oracle::in_ideal(bq, q));
        }
      }
    }
  }
}

TEST(IdealTest, MembershipIsMonotoneUnderExtension) {
  auto bq = oracle::load_fixture("fig1.quiver");
  for (auto const& r : bq.relations()) {
    VertexIndex start = bq.source(r.front());
    ASSERT_TRUE(in_ideal(bq, Path{start, r}));
    for (ArrowIndex a : bq.out_arrows(bq.target(r.back()))) {
      auto q = r;
      q.push_back(a);
      EXPECT_TRUE(in_ideal(bq, Path{start, q}));
    }
    for (ArrowIndex a : bq.in_arrows(start)) {
      std::vector<ArrowIndex> q{a};
      q.insert(q.end(), r.begin(), r.end());
      EXPECT_TRUE(in_ideal(bq, Path{bq.source(a), q}));
    }
  }
}

TEST(FiniteDimensionTest, Examples) {
  EXPECT_TRUE(is_finite_dimensional(oracle::load_fixture("fig1.quiver")));
  EXPECT_TRUE(is_finite_dimensional(oracle::load_fixture("fig5.quiver")));
  EXPECT_FALSE(is_finite_dimensional(quiver("quiver\nvertices: 1\narrows:\nl: 1 -> 1\n")));
  EXPECT_TRUE(is_finite_dimensional(
      quiver("quiver\nvertices: 1\narrows:\nl: 1 -> 1\nrelations:\nl l\n")));
}

TEST(FiniteDimensionTest, LongRelationOnCycle) {
  // Every power (xy)^2 contains x y x, so the longest paths have 3 arrows.
  auto bq = quiver(
      "quiver\nvertices: 1 2\narrows:\nx: 1 -> 2\ny: 2 -> 1\nrelations:\nx y x\n");
  EXPECT_TRUE(is_finite_dimensional(bq));
  EXPECT_EQ(algebra_dim(bq), oracle::dimension(bq));
  EXPECT_EQ(algebra_dim(bq), 7u);  // e1 e2 x y xy yx yxy
}

TEST(FiniteDimensionTest, LoopsWithSquareRelations) {
  // l l and m m vanish but (l m)^n does not.
  auto bq = quiver(
      "quiver\nvertices: 1\narrows:\nl: 1 -> 1\nm: 1 -> 1\nrelations:\nl l\nm m\n");
  EXPECT_FALSE(is_finite_dimensional(bq));
  EXPECT_THROW(algebra_dim(bq), Error);
}

TEST(PathEnumerationTest, FigureFiveExamples) {
  auto bq = oracle::load_fixture("fig5.quiver");
  auto p64 = enumerate_paths(bq, bq.vertex_index("6"), bq.vertex_index("4"));
  ASSERT_EQ(p64.size(), 1u);
  EXPECT_EQ(bq.text(p64[0]), "c'");
  auto p16 = enumerate_paths(bq, bq.vertex_index("1"), bq.vertex_index("6"));
  ASSERT_EQ(p16.size(), 1u);
  EXPECT_EQ(bq.text(p16[0]), "a e'");
  auto p11 = enumerate_paths(bq, bq.vertex_index("1"), bq.vertex_index("1"));
  ASSERT_FALSE(p11.empty());
  EXPECT_TRUE(p11.front().trivial());
}

TEST(PathEnumerationTest, OrderedByLengthThenLexicographic) {
  auto bq = oracle::load_fixture("fig1.quiver");
  for (VertexIndex v = 0; v < bq.num_vertices(); ++v) {
    for (VertexIndex w = 0; w < bq.num_vertices(); ++w) {
      auto ps = enumerate_paths(bq, v, w);
      EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
    }
  }
}

TEST(AlgebraDimTest, SmallCases) {
  EXPECT_EQ(algebra_dim(quiver("quiver\nvertices: 1\narrows:\n")), 1u);
  EXPECT_EQ(algebra_dim(single_arrow()), 3u);
}

TEST(AlgebraDimTest, AgreesWithTwoIndependentCounts) {
  for (auto name : {"fig1.quiver", "fig5.quiver", "fig4.expected", "fig6.expected"}) {
    auto bq = oracle::load_fixture(name);
    std::uint64_t by_enumeration = 0;
    for (VertexIndex v = 0; v < bq.num_vertices(); ++v) {
      for (VertexIndex w = 0; w < bq.num_vertices(); ++w) {
        auto ps = enumerate_paths(bq, v, w);
        by_enumeration += ps.size();
        EXPECT_EQ(ps.size(), (oracle::path_counts(bq)[{v, w}])) << name;
      }
    }
    EXPECT_EQ(algebra_dim(bq), by_enumeration) << name;
    EXPECT_EQ(algebra_dim(bq), oracle::dimension(bq)) << name;
  }
}

TEST(AlgebraDimTest, AgreesWithOracleOnGeneratedQuivers) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    RandomStringSpec spec{{seed, 4 + seed % 3, 5 + seed % 3, 0.3}, 0.4};
    auto bq = gen_random_string_quiver(spec);
    EXPECT_EQ(algebra_dim(bq), oracle::dimension(bq)) << "seed " << seed;
  }
}

}  // namespace
}  // namespace sagq
