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

// Left forbidden arrows, forbidden cycles and perfect forbidden cycles.

#ifndef SAGQ_FORBIDDEN_HPP_
#define SAGQ_FORBIDDEN_HPP_

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "classify.hpp"
#include "quiver.hpp"

namespace sagq {

// Arrows c_1 ... c_n forming an oriented cycle on n distinct vertices with
// every cyclically consecutive product c_i c_{i+1} in I. The cycle is
// chordless: two cycle vertices that are not consecutive are joined by no
// arrow. Stored rotated so that the smallest arrow index comes first.
struct ForbiddenCycle {
  std::vector<ArrowIndex> arrows;

  bool operator==(ForbiddenCycle const&) const = default;
  auto operator<=>(ForbiddenCycle const&) const = default;
};

inline std::vector<ArrowIndex> left_forbidden_arrows(BoundQuiver const& bq) {
  std::vector<ArrowIndex> out;
  for (ArrowIndex a = 0; a < bq.num_arrows(); ++a) {
    for (ArrowIndex b : bq.out_arrows(bq.target(a))) {
      if (detail::pair_in_ideal(bq, a, b)) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

inline bool is_forbidden_cycle(BoundQuiver const& bq, ForbiddenCycle const& c) {
  auto const&       as = c.arrows;
  std::size_t const n  = as.size();
  if (n == 0) {
    return false;
  }
  std::set<VertexIndex> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (as[i] >= bq.num_arrows()) {
      return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    ArrowIndex a = as[i], b = as[(i + 1) % n];
    if (bq.target(a) != bq.source(b) || !detail::pair_in_ideal(bq, a, b)
        || !seen.insert(bq.source(a)).second) {
      return false;
    }
  }
  // Chords: an arrow between cycle vertices that is not a cycle edge between
  // consecutive vertices.
  std::vector<std::size_t> pos(bq.num_vertices(), n);
  for (std::size_t i = 0; i < n; ++i) {
    pos[bq.source(as[i])] = i;
  }
  for (ArrowIndex x = 0; x < bq.num_arrows(); ++x) {
    std::size_t i = pos[bq.source(x)], j = pos[bq.target(x)];
    if (i == n || j == n) {
      continue;
    }
    std::size_t gap = (j + n - i) % n;
    if (gap != 1 && gap != n - 1) {
      return false;
    }
  }
  return true;
}

// Simple cycles of the relation digraph (a -> b iff ab is in I) whose
// vertices are pairwise distinct, filtered to the chordless ones.
inline std::vector<ForbiddenCycle> forbidden_cycles(BoundQuiver const& bq) {
  std::vector<ForbiddenCycle> out;
  std::vector<ArrowIndex>     path;
  std::vector<bool>           on_path(bq.num_vertices(), false);
  auto dfs = [&](auto&& self, ArrowIndex first, ArrowIndex a) -> void {
    for (ArrowIndex b : bq.out_arrows(bq.target(a))) {
      if (b < first || !detail::pair_in_ideal(bq, a, b)) {
        continue;
      }
      if (b == first) {
        if (is_forbidden_cycle(bq, ForbiddenCycle{path})) {
          out.push_back(ForbiddenCycle{path});
        }
        continue;
      }
      if (on_path[bq.source(b)]) {
        continue;
      }
      on_path[bq.source(b)] = true;
      path.push_back(b);
      self(self, first, b);
      path.pop_back();
      on_path[bq.source(b)] = false;
    }
  };
  for (ArrowIndex first = 0; first < bq.num_arrows(); ++first) {
    path.assign(1, first);
    on_path[bq.source(first)] = true;
    dfs(dfs, first, first);
    on_path[bq.source(first)] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// A relation between a cycle arrow and an outside arrow at some cycle vertex.
struct PerfectnessWitness {
  ArrowIndex first;   // the path first * second lies in I
  ArrowIndex second;

  bool operator==(PerfectnessWitness const&) const = default;
};

// Every relation breaking perfectness, vertex by vertex along the cycle.
inline std::vector<PerfectnessWitness> perfectness_witnesses(BoundQuiver const&    bq,
                                                             ForbiddenCycle const& c) {
  if (!is_forbidden_cycle(bq, c)) {
    throw Error(ErrorKind::NotForbiddenCycle, "'" + bq.text(c.arrows)
                                                  + "' is not a forbidden cycle");
  }
  auto const&       as = c.arrows;
  std::size_t const n  = as.size();
  auto on_cycle = [&](ArrowIndex x) {
    return std::find(as.begin(), as.end(), x) != as.end();
  };
  std::vector<PerfectnessWitness> out;
  for (std::size_t i = 0; i < n; ++i) {
    ArrowIndex  leaving  = as[i];
    ArrowIndex  entering = as[(i + n - 1) % n];
    VertexIndex t        = bq.source(leaving);
    for (ArrowIndex alpha : bq.in_arrows(t)) {
      if (!on_cycle(alpha) && detail::pair_in_ideal(bq, alpha, leaving)) {
        out.push_back({alpha, leaving});
      }
    }
    for (ArrowIndex beta : bq.out_arrows(t)) {
      if (!on_cycle(beta) && detail::pair_in_ideal(bq, entering, beta)) {
        out.push_back({entering, beta});
      }
    }
  }
  return out;
}

// nullopt when the cycle is perfect; otherwise the first offending relation.
inline std::optional<PerfectnessWitness> perfectness_witness(BoundQuiver const&    bq,
                                                             ForbiddenCycle const& c) {
  auto all = perfectness_witnesses(bq, c);
  if (all.empty()) {
    return std::nullopt;
  }
  return all.front();
}

inline bool is_perfect(BoundQuiver const& bq, ForbiddenCycle const& c) {
  return !perfectness_witness(bq, c).has_value();
}

struct PerfectIndex {
  std::vector<ArrowIndex>     arrows;  // declaration order
  std::vector<ForbiddenCycle> cycles;
};

// Union of the arrows of all perfect forbidden cycles.
inline PerfectIndex perfect_index(BoundQuiver const& bq) {
  require_sag(bq);
  PerfectIndex         result;
  std::set<ArrowIndex> arrows;
  for (auto const& c : forbidden_cycles(bq)) {
    if (is_perfect(bq, c)) {
      arrows.insert(c.arrows.begin(), c.arrows.end());
      result.cycles.push_back(c);
    }
  }
  result.arrows.assign(arrows.begin(), arrows.end());
  return result;
}

}  // namespace sagq

#endif  // SAGQ_FORBIDDEN_HPP_
