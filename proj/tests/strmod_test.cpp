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

#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "sagq/sagq.hpp"

namespace sagq {
namespace {

using Span = std::pair<std::size_t, std::size_t>;

// Boundary rules applied to every (start, end) pair.
std::vector<Span> brute_occurrences(Walk const& w, bool factor) {
  std::vector<Span> out;
  std::size_t const n = w.size();
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      bool before_ok = i == 0 || w.letters[i - 1].inverse == factor;
      bool after_ok  = j == n || w.letters[j].inverse != factor;
      if (before_ok && after_ok) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::vector<Span> spans(std::vector<SubstringOccurrence> const& occ) {
  std::vector<Span> out;
  for (auto const& o : occ) {
    out.emplace_back(o.start, o.end);
  }
  return out;
}

class StrmodTest : public ::testing::Test {
 protected:
  BoundQuiver fig1 = oracle::load_fixture("fig1.quiver");
  BoundQuiver fig5 = oracle::load_fixture("fig5.quiver");

  VertexIndex vx(char const* id) const { return fig5.vertex_index(id); }
  ArrowIndex  ar(char const* id) const { return fig5.arrow_index(id); }
};

TEST_F(StrmodTest, ProjectiveStrings) {
  EXPECT_EQ(format_walk(fig5, projective_string(fig5, vx("1"))), "d'^-1 a e'");
  EXPECT_EQ(format_walk(fig5, projective_string(fig5, vx("4"))), "a'^-1 d a e'");
  auto iso = parse_quiver("quiver\nvertices: 1 2\narrows:\n");
  EXPECT_EQ(projective_string(iso, 0), trivial_walk(0));
  auto one = parse_quiver("quiver\nvertices: 1 2\narrows:\na: 1 -> 2\n");
  EXPECT_EQ(format_walk(one, projective_string(one, 0)), "a");
  EXPECT_EQ(format_walk(one, projective_string(one, 1)), "@2");
}

TEST_F(StrmodTest, ProjectiveStringDimensionMatchesPathCount) {
  for (auto const* bq : {&fig1, &fig5}) {
    auto counts = oracle::path_counts(*bq);
    for (VertexIndex v = 0; v < bq->num_vertices(); ++v) {
      std::uint64_t paths_from_v = 0;
      for (VertexIndex w = 0; w < bq->num_vertices(); ++w) {
        paths_from_v += counts[{v, w}];
      }
      EXPECT_EQ(projective_string(*bq, v).size() + 1, paths_from_v);
    }
  }
}

TEST_F(StrmodTest, ArrowModuleStrings) {
  EXPECT_EQ(format_walk(fig5, arrow_module_string(fig5, ar("a"))), "e'");
  EXPECT_EQ(arrow_module_string(fig5, ar("e'")), trivial_walk(vx("6")));
  auto one = parse_quiver("quiver\nvertices: 1 2\narrows:\na: 1 -> 2\n");
  EXPECT_EQ(arrow_module_string(one, 0), trivial_walk(1));
}

TEST_F(StrmodTest, OccurrencesOnSmallWalks) {
  Walk t = trivial_walk(0);
  EXPECT_EQ(factor_substrings(t).size(), 1u);
  EXPECT_EQ(image_substrings(t).size(), 1u);

  auto one = parse_quiver("quiver\nvertices: 1 2\narrows:\na: 1 -> 2\n");
  Walk a   = parse_walk(one, "a");
  EXPECT_EQ(spans(factor_substrings(a)), (std::vector<Span>{{0, 0}, {0, 1}}));
  EXPECT_EQ(spans(image_substrings(a)), (std::vector<Span>{{0, 1}, {1, 1}}));
}

TEST_F(StrmodTest, OccurrencesMatchBoundaryRules) {
  std::vector<Walk> walks;
  for (VertexIndex v = 0; v < fig5.num_vertices(); ++v) {
    walks.push_back(projective_string(fig5, v));
  }
  walks.push_back(arrow_module_string(fig5, ar("a")));
  walks.push_back(parse_walk(fig5, "a' d'^-1 a e^-1 b' e'^-1 b f^-1 c' f'^-1 c d^-1"));
  for (auto const& w : walks) {
    EXPECT_EQ(spans(factor_substrings(w)), brute_occurrences(w, true)) << format_walk(fig5, w);
    EXPECT_EQ(spans(image_substrings(w)), brute_occurrences(w, false)) << format_walk(fig5, w);
  }
}

TEST_F(StrmodTest, HomExamples) {
  EXPECT_EQ(hom_dim(fig5, trivial_walk(0), trivial_walk(0)), 1u);
  EXPECT_EQ(hom_dim(fig5, projective_string(fig5, vx("4")), projective_string(fig5, vx("6"))),
            1u);
  auto two = parse_quiver("quiver\nvertices: 1 2 3 4\narrows:\na: 1 -> 2\nb: 3 -> 4\n");
  EXPECT_EQ(hom_dim(two, parse_walk(two, "a"), parse_walk(two, "b")), 0u);
}

TEST_F(StrmodTest, HomRejectsInvalidWalks) {
  try {
    hom_dim(fig5, parse_walk(fig5, "a b"), trivial_walk(0));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidWalk);
  }
}

TEST_F(StrmodTest, ProjectiveHomsCountPaths) {
  for (auto const* bq : {&fig1, &fig5}) {
    auto counts = oracle::path_counts(*bq);
    for (VertexIndex v = 0; v < bq->num_vertices(); ++v) {
      for (VertexIndex w = 0; w < bq->num_vertices(); ++w) {
        EXPECT_EQ(hom_dim(*bq, projective_string(*bq, w), projective_string(*bq, v)),
                  (counts[{v, w}]))
            << bq->vertex_id(v) << " -> " << bq->vertex_id(w);
      }
    }
  }
}

TEST_F(StrmodTest, HomIsInvariantUnderInversionAndPositive) {
  auto strings = enumerate_strings(fig5, 4);
  for (std::size_t i = 0; i < strings.size(); i += 3) {
    for (std::size_t j = 0; j < strings.size(); j += 5) {
      auto const& s2 = strings[i];
      auto const& s1 = strings[j];
      auto h         = hom_dim(fig5, s2, s1);
      EXPECT_EQ(h, hom_dim(fig5, inverse(fig5, s2), s1));
      EXPECT_EQ(h, hom_dim(fig5, s2, inverse(fig5, s1)));
    }
  }
  for (auto const& s : strings) {
    EXPECT_GE(hom_dim(fig5, s, s), 1u) << format_walk(fig5, s);
  }
}

TEST_F(StrmodTest, ArrowModuleSitsInsideProjective) {
  for (auto const* bq : {&fig1, &fig5}) {
    for (ArrowIndex a = 0; a < bq->num_arrows(); ++a) {
      auto m = arrow_module_string(*bq, a);
      auto p = projective_string(*bq, bq->source(a));
      // alpha*A is a submodule of P(source(alpha)), so Hom is nonzero.
      EXPECT_GE(hom_dim(*bq, m, p), 1u) << bq->arrow_id(a);
    }
  }
}

TEST_F(StrmodTest, ModuleHandlesCarryTheirLabels) {
  auto h = arrow_module(fig5, ar("a"));
  EXPECT_EQ(h.label, StringModuleHandle::Label::arrow);
  EXPECT_EQ(h.walk, arrow_module_string(fig5, ar("a")));
  auto p = projective_module(fig5, vx("2"));
  EXPECT_EQ(p.label, StringModuleHandle::Label::projective);
  EXPECT_EQ(p.string, canonical_string(fig5, projective_string(fig5, vx("2"))));
}

}  // namespace
}  // namespace sagq
