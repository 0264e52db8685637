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

// Bound quivers (Q, I) with monomial relations, path arithmetic, ideal
// membership, path enumeration and the dimension of kQ/I.
//
// Paths compose left to right: the path "a b" is a followed by b, so it is
// composable when target(a) == source(b).

#ifndef SAGQ_QUIVER_HPP_
#define SAGQ_QUIVER_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "automaton.hpp"
#include "error.hpp"

namespace sagq {

using VertexIndex = std::size_t;
using ArrowIndex  = std::size_t;

struct Arrow {
  std::string id;
  VertexIndex source;
  VertexIndex target;

  bool operator==(Arrow const&) const = default;
};

// A path on the quiver. Trivial paths (no arrows) are the idempotents e_v and
// are anchored at `start`.
struct Path {
  VertexIndex             start = 0;
  std::vector<ArrowIndex> arrows;

  bool        trivial() const noexcept { return arrows.empty(); }
  std::size_t length() const noexcept { return arrows.size(); }

  bool operator==(Path const&) const = default;
};

// Length first, then lexicographic on arrow declaration order.
inline bool operator<(Path const& x, Path const& y) {
  if (x.arrows.size() != y.arrows.size()) {
    return x.arrows.size() < y.arrows.size();
  }
  if (x.arrows != y.arrows) {
    return x.arrows < y.arrows;
  }
  return x.start < y.start;
}

namespace detail {
  inline bool is_token_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')
           || (c >= '0' && c <= '9') || c == '_' || c == '\'';
  }
}  // namespace detail

// Ids are nonempty words over [A-Za-z0-9_'].
inline bool is_valid_token(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), detail::is_token_char);
}

namespace detail {
  inline bool contains_factor(std::span<ArrowIndex const> word,
                              std::span<ArrowIndex const> factor) {
    if (factor.size() > word.size()) {
      return false;
    }
    return std::search(word.begin(), word.end(), factor.begin(), factor.end())
           != word.end();
  }
}  // namespace detail

// Reduce a relation set to factor-minimal generators, keeping the first
// occurrence order. The generated ideal is unchanged.
inline std::vector<std::vector<ArrowIndex>>
normalize_relations(std::vector<std::vector<ArrowIndex>> const& relations) {
  std::vector<std::vector<ArrowIndex>> result;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    auto const& r         = relations[i];
    bool        redundant = false;
    for (std::size_t j = 0; j < relations.size() && !redundant; ++j) {
      if (i == j) {
        continue;
      }
      auto const& other = relations[j];
      if (other == r) {
        redundant = j < i;  // keep the first copy only
      } else if (detail::contains_factor(r, other)) {
        redundant = true;
      }
    }
    if (!redundant) {
      result.push_back(r);
    }
  }
  return result;
}

class BoundQuiver {
 public:
  struct ArrowSpec {
    std::string id;
    std::string source;
    std::string target;
  };

  BoundQuiver() : BoundQuiver(std::vector<std::string>{}, {}, {}) {}

  // Index-level constructor. Relations are normalized to factor-minimal
  // generators.
  BoundQuiver(std::vector<std::string>             vertices,
              std::vector<Arrow>                   arrows,
              std::vector<std::vector<ArrowIndex>> relations)
      : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (!is_valid_token(vertices_[v])) {
        throw Error(ErrorKind::InvalidId,
                    "invalid vertex id '" + vertices_[v] + "'");
      }
      if (!vertex_index_.emplace(vertices_[v], v).second) {
        throw Error(ErrorKind::DuplicateId,
                    "vertex '" + vertices_[v] + "' declared twice");
      }
    }
    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      Arrow const& arrow = arrows_[a];
      if (!is_valid_token(arrow.id)) {
        throw Error(ErrorKind::InvalidId,
                    "invalid arrow id '" + arrow.id + "'");
      }
      if (vertex_index_.contains(arrow.id)
          || !arrow_index_.emplace(arrow.id, a).second) {
        throw Error(ErrorKind::DuplicateId,
                    "arrow id '" + arrow.id + "' is already in use");
      }
      if (arrow.source >= vertices_.size() || arrow.target >= vertices_.size()) {
        throw Error(ErrorKind::DanglingEndpoint,
                    "arrow '" + arrow.id + "' has an undeclared endpoint");
      }
      out_[arrow.source].push_back(a);
      in_[arrow.target].push_back(a);
    }
    for (auto const& r : relations) {
      for (ArrowIndex a : r) {
        if (a >= arrows_.size()) {
          throw Error(ErrorKind::UnknownArrow,
                      "relation uses an arrow index out of range");
        }
      }
      if (r.size() < 2) {
        throw Error(ErrorKind::RelationTooShort,
                    "relation '" + text(r) + "' has length < 2");
      }
      if (!is_composable(r)) {
        throw Error(ErrorKind::NonComposableRelation,
                    "relation '" + text(r) + "' is not a path");
      }
    }
    relations_ = normalize_relations(relations);
    std::vector<std::vector<std::size_t>> reversed;
    reversed.reserve(relations_.size());
    for (auto const& r : relations_) {
      reversed.emplace_back(r.rbegin(), r.rend());
      max_relation_length_ = std::max(max_relation_length_, r.size());
    }
    forward_ = FactorAutomaton(arrows_.size(), relations_);
    reverse_ = FactorAutomaton(arrows_.size(), reversed);
  }

  // Id-level factory used by the parsers.
  static BoundQuiver make(std::vector<std::string> const&              vertices,
                          std::vector<ArrowSpec> const&                arrows,
                          std::vector<std::vector<std::string>> const& relations) {
    std::unordered_map<std::string, VertexIndex> vertex_index;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      vertex_index.emplace(vertices[v], v);
    }
    std::vector<Arrow> arrow_list;
    std::unordered_map<std::string, ArrowIndex> arrow_index;
    for (auto const& spec : arrows) {
      auto s = vertex_index.find(spec.source);
      auto t = vertex_index.find(spec.target);
      if (s == vertex_index.end() || t == vertex_index.end()) {
        throw Error(ErrorKind::DanglingEndpoint,
                    "arrow '" + spec.id + "' refers to undeclared vertex '"
                        + (s == vertex_index.end() ? spec.source : spec.target)
                        + "'");
      }
      arrow_index.emplace(spec.id, arrow_list.size());
      arrow_list.push_back(Arrow{spec.id, s->second, t->second});
    }
    std::vector<std::vector<ArrowIndex>> relation_list;
    for (auto const& r : relations) {
      std::vector<ArrowIndex> path;
      for (auto const& id : r) {
        auto it = arrow_index.find(id);
        if (it == arrow_index.end()) {
          throw Error(ErrorKind::UnknownArrow,
                      "relation uses undeclared arrow '" + id + "'");
        }
        path.push_back(it->second);
      }
      relation_list.push_back(std::move(path));
    }
    return BoundQuiver(vertices, std::move(arrow_list), std::move(relation_list));
  }

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_arrows() const noexcept { return arrows_.size(); }

  std::vector<std::string> const& vertices() const noexcept { return vertices_; }
  std::vector<Arrow> const&       arrows() const noexcept { return arrows_; }
  std::vector<std::vector<ArrowIndex>> const& relations() const noexcept {
    return relations_;
  }

  std::string const& vertex_id(VertexIndex v) const { return vertices_.at(v); }
  Arrow const&       arrow(ArrowIndex a) const { return arrows_.at(a); }
  std::string const& arrow_id(ArrowIndex a) const { return arrows_.at(a).id; }
  VertexIndex        source(ArrowIndex a) const { return arrows_.at(a).source; }
  VertexIndex        target(ArrowIndex a) const { return arrows_.at(a).target; }

  std::vector<ArrowIndex> const& out_arrows(VertexIndex v) const {
    return out_.at(v);
  }
  std::vector<ArrowIndex> const& in_arrows(VertexIndex v) const {
    return in_.at(v);
  }

  std::optional<VertexIndex> find_vertex(std::string_view id) const {
    auto it = vertex_index_.find(std::string(id));
    return it == vertex_index_.end() ? std::nullopt
                                     : std::optional<VertexIndex>(it->second);
  }

  std::optional<ArrowIndex> find_arrow(std::string_view id) const {
    auto it = arrow_index_.find(std::string(id));
    return it == arrow_index_.end() ? std::nullopt
                                    : std::optional<ArrowIndex>(it->second);
  }

  VertexIndex vertex_index(std::string_view id) const {
    if (auto v = find_vertex(id)) {
      return *v;
    }
    throw Error(ErrorKind::UnknownVertex, "no vertex '" + std::string(id) + "'");
  }

  ArrowIndex arrow_index(std::string_view id) const {
    if (auto a = find_arrow(id)) {
      return *a;
    }
    throw Error(ErrorKind::UnknownArrow, "no arrow '" + std::string(id) + "'");
  }

  bool is_composable(std::span<ArrowIndex const> arrows) const {
    for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
      if (target(arrows[i]) != source(arrows[i + 1])) {
        return false;
      }
    }
    return true;
  }

  // True iff some relation is a contiguous factor of the arrow sequence.
  bool contains_relation(std::span<ArrowIndex const> arrows) const {
    return forward_.contains_factor(arrows);
  }

  FactorAutomaton const& forward_automaton() const noexcept { return forward_; }
  // Recognises relations read right to left; used for inverse runs of walks.
  FactorAutomaton const& reverse_automaton() const noexcept { return reverse_; }
  std::size_t max_relation_length() const noexcept { return max_relation_length_; }

  VertexIndex path_end(Path const& p) const {
    return p.trivial() ? p.start : target(p.arrows.back());
  }

  std::string text(std::span<ArrowIndex const> arrows) const {
    std::string out;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += arrows_.at(arrows[i]).id;
    }
    return out;
  }

  std::string text(Path const& p) const {
    return p.trivial() ? "e_" + vertex_id(p.start) : text(p.arrows);
  }

  bool operator==(BoundQuiver const& other) const {
    return vertices_ == other.vertices_ && arrows_ == other.arrows_
           && relations_ == other.relations_;
  }

 private:
  std::vector<std::string>                     vertices_;
  std::vector<Arrow>                           arrows_;
  std::vector<std::vector<ArrowIndex>>         relations_;
  std::unordered_map<std::string, VertexIndex> vertex_index_;
  std::unordered_map<std::string, ArrowIndex>  arrow_index_;
  std::vector<std::vector<ArrowIndex>>         out_;
  std::vector<std::vector<ArrowIndex>>         in_;
  FactorAutomaton                              forward_;
  FactorAutomaton                              reverse_;
  std::size_t                                  max_relation_length_ = 0;
};

// Compare two presentations as sets: same vertex ids, same arrows with the
// same endpoint ids, same relation words. Declaration order is ignored.
inline bool same_presentation(BoundQuiver const& x, BoundQuiver const& y) {
  auto vertices = [](BoundQuiver const& q) {
    auto v = q.vertices();
    std::sort(v.begin(), v.end());
    return v;
  };
  auto arrows = [](BoundQuiver const& q) {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (auto const& a : q.arrows()) {
      out.emplace_back(a.id, q.vertex_id(a.source), q.vertex_id(a.target));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto relations = [](BoundQuiver const& q) {
    std::vector<std::vector<std::string>> out;
    for (auto const& r : q.relations()) {
      std::vector<std::string> word;
      for (ArrowIndex a : r) {
        word.push_back(q.arrow_id(a));
      }
      out.push_back(std::move(word));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return vertices(x) == vertices(y) && arrows(x) == arrows(y)
         && relations(x) == relations(y);
}

inline bool is_valid_path(BoundQuiver const& bq, Path const& p) {
  if (p.trivial()) {
    return p.start < bq.num_vertices();
  }
  for (ArrowIndex a : p.arrows) {
    if (a >= bq.num_arrows()) {
      return false;
    }
  }
  return bq.source(p.arrows.front()) == p.start && bq.is_composable(p.arrows);
}

inline Path make_path(BoundQuiver const& bq, std::vector<ArrowIndex> arrows) {
  if (arrows.empty()) {
    throw Error(ErrorKind::InvalidPath, "use trivial_path for e_v");
  }
  Path p{bq.source(arrows.front()), std::move(arrows)};
  if (!is_valid_path(bq, p)) {
    throw Error(ErrorKind::InvalidPath, "'" + bq.text(p.arrows) + "' is not composable");
  }
  return p;
}

inline Path make_path(BoundQuiver const& bq, std::vector<std::string> const& ids) {
  std::vector<ArrowIndex> arrows;
  for (auto const& id : ids) {
    arrows.push_back(bq.arrow_index(id));
  }
  return make_path(bq, std::move(arrows));
}

inline Path trivial_path(VertexIndex v) {
  return Path{v, {}};
}

// Membership of a path in the monomial ideal I. Trivial paths are never in I.
inline bool in_ideal(BoundQuiver const& bq, Path const& p) {
  if (!is_valid_path(bq, p)) {
    throw Error(ErrorKind::InvalidPath, "not a path on this quiver");
  }
  return bq.contains_relation(p.arrows);
}

namespace detail {
  // Nodes of the product of the quiver with the forbidden-factor automaton,
  // restricted to non-accepting states: (vertex, state) -> vertex * S + state.
  class PathProduct {
   public:
    explicit PathProduct(BoundQuiver const& bq)
        : bq_(bq), states_(bq.forward_automaton().num_states()) {}

    std::size_t node(VertexIndex v, FactorAutomaton::State s) const {
      return v * states_ + s;
    }
    std::size_t num_nodes() const { return bq_.num_vertices() * states_; }

    // Calls f(arrow, next_node) for every relation-free extension.
    template <typename F>
    void for_each_successor(std::size_t node, F&& f) const {
      VertexIndex v = node / states_;
      auto        s = static_cast<FactorAutomaton::State>(node % states_);
      for (ArrowIndex a : bq_.out_arrows(v)) {
        auto next = bq_.forward_automaton().step(s, a);
        if (!bq_.forward_automaton().is_match(next)) {
          f(a, this->node(bq_.target(a), next));
        }
      }
    }

   private:
    BoundQuiver const& bq_;
    std::size_t        states_;
  };
}  // namespace detail

// kQ/I is finite-dimensional iff no oriented cycle can be traversed forever
// without completing a relation, i.e. the reachable part of the
// quiver x automaton product is acyclic.
inline bool is_finite_dimensional(BoundQuiver const& bq) {
  detail::PathProduct product(bq);
  enum : std::uint8_t { white, grey, black };
  std::vector<std::uint8_t> colour(product.num_nodes(), white);
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> stack;
  for (VertexIndex v = 0; v < bq.num_vertices(); ++v) {
    std::size_t start = product.node(v, FactorAutomaton::root);
    if (colour[start] != white) {
      continue;
    }
    auto expand = [&](std::size_t n) {
      std::vector<std::size_t> next;
      product.for_each_successor(n, [&](ArrowIndex, std::size_t m) {
        next.push_back(m);
      });
      colour[n] = grey;
      stack.emplace_back(n, std::move(next));
    };
    expand(start);
    while (!stack.empty()) {
      auto& [n, next] = stack.back();
      if (next.empty()) {
        colour[n] = black;
        stack.pop_back();
        continue;
      }
      std::size_t m = next.back();
      next.pop_back();
      if (colour[m] == grey) {
        return false;
      }
      if (colour[m] == white) {
        expand(m);
      }
    }
  }
  return true;
}

inline void require_finite_dimensional(BoundQuiver const& bq) {
  if (!is_finite_dimensional(bq)) {
    throw Error(ErrorKind::InfiniteDimensional,
                "the quiver has an oriented cycle avoiding every relation");
  }
}

// All paths from `from` to `to` outside the ideal, including e_v when
// from == to, ordered by length then arrow declaration order.
inline std::vector<Path> enumerate_paths(BoundQuiver const& bq,
                                         VertexIndex        from,
                                         VertexIndex        to) {
  if (from >= bq.num_vertices() || to >= bq.num_vertices()) {
    throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  }
  require_finite_dimensional(bq);
  detail::PathProduct     product(bq);
  std::vector<Path>       result;
  std::vector<ArrowIndex> current;
  auto dfs = [&](auto&& self, std::size_t node, VertexIndex at) -> void {
    if (at == to) {
      result.push_back(Path{from, current});
    }
    product.for_each_successor(node, [&](ArrowIndex a, std::size_t next) {
      current.push_back(a);
      self(self, next, bq.target(a));
      current.pop_back();
    });
  };
  dfs(dfs, product.node(from, FactorAutomaton::root), from);
  std::sort(result.begin(), result.end());
  return result;
}

// dim_k kQ/I, counted by dynamic programming over the acyclic product graph.
inline std::uint64_t algebra_dim(BoundQuiver const& bq) {
  require_finite_dimensional(bq);
  detail::PathProduct product(bq);
  // count[n] = number of relation-free paths (including the empty one)
  // leaving product node n.
  std::vector<std::optional<std::uint64_t>> count(product.num_nodes());
  auto paths_from = [&](auto&& self, std::size_t node) -> std::uint64_t {
    if (count[node]) {
      return *count[node];
    }
    std::uint64_t total = 1;
    product.for_each_successor(node, [&](ArrowIndex, std::size_t next) {
      total += self(self, next);
    });
    count[node] = total;
    return total;
  };
  std::uint64_t dim = 0;
  for (VertexIndex v = 0; v < bq.num_vertices(); ++v) {
    dim += paths_from(paths_from, product.node(v, FactorAutomaton::root));
  }
  return dim;
}

}  // namespace sagq

#endif  // SAGQ_QUIVER_HPP_
