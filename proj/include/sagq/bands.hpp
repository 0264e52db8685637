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

// String enumeration, band detection and representation type.
//
// Both rest on the letter graph: a node is a letter together with the state
// of the forbidden-factor automaton for the run the letter ends, and an edge
// l -> l' means l' may follow l in a string. Walks in this graph are exactly
// the strings; its cycles are exactly the bands once the algebra is
// finite-dimensional (a cycle with no change of direction would be a
// relation-free oriented cycle). A simple cycle never repeats a node, so it
// cannot be a proper power.

#ifndef SAGQ_BANDS_HPP_
#define SAGQ_BANDS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "quiver.hpp"
#include "walk.hpp"

namespace sagq {

class LetterGraph {
 public:
  struct Node {
    Letter                 letter;
    FactorAutomaton::State state;
  };

  explicit LetterGraph(BoundQuiver const& bq) : bq_(&bq) {
    for (ArrowIndex a = 0; a < bq.num_arrows(); ++a) {
      for (Letter l : {fwd(a), inv(a)}) {
        initial_.push_back(intern(l, automaton(l).step(FactorAutomaton::root, a)));
      }
    }
    for (std::size_t n = 0; n < nodes_.size(); ++n) {  // nodes_ grows
      std::vector<std::size_t> succ;
      Node const               here = nodes_[n];
      VertexIndex const        x    = letter_target(bq, here.letter);
      std::vector<Letter>      next;
      for (ArrowIndex b : bq.out_arrows(x)) {
        next.push_back(fwd(b));
      }
      for (ArrowIndex b : bq.in_arrows(x)) {
        next.push_back(inv(b));
      }
      std::sort(next.begin(), next.end());
      for (Letter l : next) {
        if (l == here.letter.inverted()) {
          continue;
        }
        FactorAutomaton const& aut = automaton(l);
        FactorAutomaton::State s
            = l.inverse == here.letter.inverse ? aut.step(here.state, l.arrow)
                                               : aut.step(FactorAutomaton::root, l.arrow);
        if (aut.is_match(s)) {
          continue;
        }
        succ.push_back(intern(l, s));
      }
      successors_.push_back(std::move(succ));
    }
  }

  std::size_t num_nodes() const noexcept { return nodes_.size(); }
  Node const& node(std::size_t n) const { return nodes_[n]; }
  std::vector<std::size_t> const& successors(std::size_t n) const {
    return successors_[n];
  }
  // One start node per letter, in letter order.
  std::vector<std::size_t> const& initial_nodes() const noexcept { return initial_; }

  // Some node lying on a cycle, if any.
  std::optional<std::size_t> find_cycle_node() const {
    enum : std::uint8_t { white, grey, black };
    std::vector<std::uint8_t> colour(nodes_.size(), white);
    std::vector<std::pair<std::size_t, std::size_t>> stack;  // node, next edge
    for (std::size_t root = 0; root < nodes_.size(); ++root) {
      if (colour[root] != white) {
        continue;
      }
      colour[root] = grey;
      stack.emplace_back(root, 0);
      while (!stack.empty()) {
        auto& [n, i] = stack.back();
        if (i == successors_[n].size()) {
          colour[n] = black;
          stack.pop_back();
          continue;
        }
        std::size_t m = successors_[n][i++];
        if (colour[m] == grey) {
          return m;
        }
        if (colour[m] == white) {
          colour[m] = grey;
          stack.emplace_back(m, 0);
        }
      }
    }
    return std::nullopt;
  }

  // Shortest cycle through n, as a node sequence starting at n.
  std::optional<std::vector<std::size_t>> shortest_cycle_through(std::size_t n) const {
    std::vector<std::size_t> parent(nodes_.size(), static_cast<std::size_t>(-1));
    std::vector<bool>        seen(nodes_.size(), false);
    std::queue<std::size_t>  queue;
    for (std::size_t m : successors_[n]) {
      if (m == n) {
        return std::vector<std::size_t>{n};
      }
      if (!seen[m]) {
        seen[m]   = true;
        parent[m] = n;
        queue.push(m);
      }
    }
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop();
      for (std::size_t m : successors_[u]) {
        if (m == n) {
          std::vector<std::size_t> cycle;
          for (std::size_t x = u; x != n; x = parent[x]) {
            cycle.push_back(x);
          }
          cycle.push_back(n);
          std::reverse(cycle.begin(), cycle.end());
          return cycle;
        }
        if (!seen[m]) {
          seen[m]   = true;
          parent[m] = u;
          queue.push(m);
        }
      }
    }
    return std::nullopt;
  }

 private:
  FactorAutomaton const& automaton(Letter l) const {
    return l.inverse ? bq_->reverse_automaton() : bq_->forward_automaton();
  }

  std::size_t intern(Letter l, FactorAutomaton::State s) {
    auto key      = std::make_pair(l, s);
    auto [it, ok] = index_.emplace(key, nodes_.size());
    if (ok) {
      nodes_.push_back(Node{l, s});
    }
    return it->second;
  }

  BoundQuiver const*                                          bq_;
  std::vector<Node>                                           nodes_;
  std::vector<std::vector<std::size_t>>                       successors_;
  std::vector<std::size_t>                                    initial_;
  std::map<std::pair<Letter, FactorAutomaton::State>, std::size_t> index_;
};

// Equivalence classes of strings with at most max_letters letters, one
// canonical representative each, trivial strings first.
inline std::vector<CanonicalForm> enumerate_strings(BoundQuiver const& bq,
                                                    std::size_t max_letters) {
  require_string_pair(bq);
  std::set<Walk> classes;
  for (VertexIndex v = 0; v < bq.num_vertices(); ++v) {
    classes.insert(trivial_walk(v));
  }
  if (max_letters > 0) {
    LetterGraph         graph(bq);
    std::vector<Letter> current;
    auto dfs = [&](auto&& self, std::size_t n) -> void {
      current.push_back(graph.node(n).letter);
      classes.insert(canonical_string(bq, make_walk(bq, current)));
      if (current.size() < max_letters) {
        for (std::size_t m : graph.successors(n)) {
          self(self, m);
        }
      }
      current.pop_back();
    };
    for (std::size_t n : graph.initial_nodes()) {
      dfs(dfs, n);
    }
  }
  return {classes.begin(), classes.end()};
}

inline bool band_exists(BoundQuiver const& bq) {
  require_string_pair(bq);
  require_finite_dimensional(bq);
  return LetterGraph(bq).find_cycle_node().has_value();
}

// A band of minimal length, in canonical form, or nothing.
inline std::optional<CyclicWalk> find_band(BoundQuiver const& bq) {
  require_string_pair(bq);
  require_finite_dimensional(bq);
  LetterGraph graph(bq);
  if (!graph.find_cycle_node()) {
    return std::nullopt;
  }
  std::optional<std::vector<std::size_t>> best;
  for (std::size_t n = 0; n < graph.num_nodes(); ++n) {
    auto cycle = graph.shortest_cycle_through(n);
    if (cycle && (!best || cycle->size() < best->size())) {
      best = std::move(cycle);
    }
  }
  CyclicWalk band;
  for (std::size_t n : *best) {
    band.letters.push_back(graph.node(n).letter);
  }
  // The automaton state may differ between repetitions of a shorter word, so
  // the cycle can spell a proper power; its primitive root is the band.
  std::size_t const len = band.size();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d == 0
        && std::equal(band.letters.begin() + static_cast<std::ptrdiff_t>(d),
                      band.letters.end(), band.letters.begin())) {
      band.letters.resize(d);
      break;
    }
  }
  return canonical_band(band);
}

enum class RepresentationType { finite, infinite };

inline std::string_view to_string(RepresentationType t) {
  return t == RepresentationType::finite ? "finite" : "infinite";
}

inline RepresentationType representation_type(BoundQuiver const& bq) {
  return band_exists(bq) ? RepresentationType::infinite : RepresentationType::finite;
}

}  // namespace sagq

#endif  // SAGQ_BANDS_HPP_
