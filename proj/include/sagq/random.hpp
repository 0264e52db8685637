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

// Seeded generators of random string and SAG bound quivers for property
// tests. Output is a pure function of the spec.

#ifndef SAGQ_RANDOM_HPP_
#define SAGQ_RANDOM_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "classify.hpp"
#include "error.hpp"
#include "quiver.hpp"

namespace sagq {

struct RandomSagSpec {
  std::uint64_t seed             = 1;
  std::size_t   num_vertices     = 5;
  std::size_t   num_arrows       = 6;
  double        relation_density = 0.3;  // chance of an extra length-2 relation
};

struct RandomStringSpec {
  RandomSagSpec base;
  // Chance that a relation-free path of length 3 becomes a relation.
  double long_relation_density = 0.3;
};

namespace detail {
  inline constexpr std::size_t generation_budget = 10000;

  // Random arrows with in- and out-degree at most two, then just enough
  // length-2 relations for (S2) plus extra ones at the given density.
  inline std::optional<BoundQuiver> random_sag_attempt(RandomSagSpec const& spec,
                                                       std::mt19937_64&     rng) {
    std::size_t const n = spec.num_vertices;
    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < n; ++v) {
      vertices.push_back(std::to_string(v + 1));
    }
    std::vector<std::size_t> outdeg(n, 0), indeg(n, 0);
    std::vector<Arrow>       arrows;
    std::uniform_int_distribution<std::size_t> pick(0, n == 0 ? 0 : n - 1);
    for (std::size_t k = 0; k < spec.num_arrows; ++k) {
      std::vector<std::pair<std::size_t, std::size_t>> options;
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
          if (outdeg[s] < 2 && indeg[t] < 2) {
            options.emplace_back(s, t);
          }
        }
      }
      if (options.empty()) {
        return std::nullopt;
      }
      auto [s, t] = options[std::uniform_int_distribution<std::size_t>(
          0, options.size() - 1)(rng)];
      ++outdeg[s];
      ++indeg[t];
      arrows.push_back(Arrow{"x" + std::to_string(k + 1), s, t});
    }
    std::set<std::pair<ArrowIndex, ArrowIndex>> relations;
    std::bernoulli_distribution                 extra(spec.relation_density);
    std::bernoulli_distribution                 coin(0.5);
    std::size_t const                           m = arrows.size();
    for (ArrowIndex a = 0; a < m; ++a) {
      for (ArrowIndex b = 0; b < m; ++b) {
        if (arrows[a].target == arrows[b].source && extra(rng)) {
          relations.emplace(a, b);
        }
      }
    }
    // (S2)_R: of the arrows leaving t(a), at most one may follow a freely.
    for (ArrowIndex a = 0; a < m; ++a) {
      std::vector<ArrowIndex> free;
      for (ArrowIndex b = 0; b < m; ++b) {
        if (arrows[a].target == arrows[b].source && !relations.contains({a, b})) {
          free.push_back(b);
        }
      }
      if (free.size() > 1) {
        relations.emplace(a, free[coin(rng) ? 0 : 1]);
      }
    }
    // (S2)_L, symmetrically. Adding relations cannot break (S2)_R.
    for (ArrowIndex b = 0; b < m; ++b) {
      std::vector<ArrowIndex> free;
      for (ArrowIndex a = 0; a < m; ++a) {
        if (arrows[a].target == arrows[b].source && !relations.contains({a, b})) {
          free.push_back(a);
        }
      }
      if (free.size() > 1) {
        relations.emplace(free[coin(rng) ? 0 : 1], b);
      }
    }
    std::vector<std::vector<ArrowIndex>> words;
    for (auto [a, b] : relations) {
      words.push_back({a, b});
    }
    return BoundQuiver(std::move(vertices), std::move(arrows), std::move(words));
  }
}  // namespace detail

// A SAG, finite-dimensional bound quiver with exactly the requested numbers
// of vertices and arrows. Throws GenerationExhausted when rejection sampling
// fails.
inline BoundQuiver gen_random_sag(RandomSagSpec const& spec) {
  std::mt19937_64 rng(spec.seed);
  for (std::size_t attempt = 0; attempt < detail::generation_budget; ++attempt) {
    auto bq = detail::random_sag_attempt(spec, rng);
    if (bq && is_sag_pair(*bq) && is_finite_dimensional(*bq)) {
      return std::move(*bq);
    }
  }
  throw Error(ErrorKind::GenerationExhausted,
              "no SAG quiver found for seed " + std::to_string(spec.seed));
}

// A string pair that may carry relations of length 3.
inline BoundQuiver gen_random_string_quiver(RandomStringSpec const& spec) {
  std::mt19937_64             rng(spec.base.seed);
  std::bernoulli_distribution extra(spec.long_relation_density);
  for (std::size_t attempt = 0; attempt < detail::generation_budget; ++attempt) {
    auto bq = detail::random_sag_attempt(spec.base, rng);
    if (!bq) {
      continue;
    }
    auto relations = bq->relations();
    for (ArrowIndex a = 0; a < bq->num_arrows(); ++a) {
      for (ArrowIndex b : bq->out_arrows(bq->target(a))) {
        for (ArrowIndex c : bq->out_arrows(bq->target(b))) {
          std::vector<ArrowIndex> word{a, b, c};
          if (!bq->contains_relation(word) && extra(rng)) {
            relations.push_back(word);
          }
        }
      }
    }
    BoundQuiver candidate(bq->vertices(), bq->arrows(), std::move(relations));
    if (is_string_pair(candidate) && is_finite_dimensional(candidate)) {
      return candidate;
    }
  }
  throw Error(ErrorKind::GenerationExhausted,
              "no string quiver found for seed " + std::to_string(spec.base.seed));
}

}  // namespace sagq

#endif  // SAGQ_RANDOM_HPP_
