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

// Combinatorics of string modules: the strings of indecomposable projectives
// and of arrow modules alpha*A, factor and image substrings, and hom-space
// dimensions between string modules.
//
// Conventions: modules are right modules and "a b" means a then b, so the
// projective e_v A has top at v and its arrows point away from v. A factor
// substring (a quotient) has its neighbouring arrows pointing out of it, an
// image substring (a submodule) has them pointing into it.

#ifndef SAGQ_STRMOD_HPP_
#define SAGQ_STRMOD_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "classify.hpp"
#include "quiver.hpp"
#include "walk.hpp"

namespace sagq {

namespace detail {
  // The maximal relation-free directed path that starts with `first`.
  inline std::vector<ArrowIndex> maximal_run(BoundQuiver const& bq, ArrowIndex first) {
    std::vector<ArrowIndex> path{first};
    for (;;) {
      bool extended = false;
      for (ArrowIndex c : bq.out_arrows(bq.target(path.back()))) {
        path.push_back(c);
        if (!bq.contains_relation(path)) {
          extended = true;
          break;
        }
        path.pop_back();
      }
      if (!extended) {
        return path;
      }
    }
  }
}  // namespace detail

// The string of P(v) = e_v A: the second branch out of v inverted, followed
// by the first branch. Branches are taken in arrow declaration order.
inline Walk projective_string(BoundQuiver const& bq, VertexIndex v) {
  require_string_pair(bq);
  require_finite_dimensional(bq);
  auto const& out = bq.out_arrows(v);
  Walk        w   = trivial_walk(v);
  if (out.size() > 1) {
    auto branch = detail::maximal_run(bq, out[1]);
    w.start     = bq.target(branch.back());
    for (auto it = branch.rbegin(); it != branch.rend(); ++it) {
      w.letters.push_back(inv(*it));
    }
  }
  if (!out.empty()) {
    for (ArrowIndex a : detail::maximal_run(bq, out[0])) {
      w.letters.push_back(fwd(a));
    }
  }
  return w;
}

// The string of alpha*A: the relation-free continuation a_2 ... a_n of alpha,
// as a walk from target(alpha).
inline Walk arrow_module_string(BoundQuiver const& bq, ArrowIndex alpha) {
  require_string_pair(bq);
  require_finite_dimensional(bq);
  auto run = detail::maximal_run(bq, alpha);
  Walk w   = trivial_walk(bq.target(alpha));
  for (std::size_t i = 1; i < run.size(); ++i) {
    w.letters.push_back(fwd(run[i]));
  }
  return w;
}

enum class OccurrenceKind { factor, image };

// The sub-walk through vertex positions start..end (0 <= start <= end <= n),
// i.e. letters start+1..end in 1-based numbering. start == end is the trivial
// sub-walk at that vertex.
struct SubstringOccurrence {
  std::size_t    start;
  std::size_t    end;
  OccurrenceKind kind;

  bool trivial() const noexcept { return start == end; }
  bool operator==(SubstringOccurrence const&) const = default;
};

namespace detail {
  inline std::vector<SubstringOccurrence> occurrences(Walk const& w, OccurrenceKind kind) {
    std::vector<SubstringOccurrence> out;
    auto const&       ls = w.letters;
    std::size_t const n  = ls.size();
    // Factor: arrow before points back out (inverse letter), arrow after
    // points forward out (direct letter). Image: the reverse.
    bool const want_inverse_before = kind == OccurrenceKind::factor;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i > 0 && ls[i - 1].inverse != want_inverse_before) {
        continue;
      }
      for (std::size_t j = i; j <= n; ++j) {
        if (j < n && ls[j].inverse == want_inverse_before) {
          continue;
        }
        out.push_back({i, j, kind});
      }
    }
    return out;
  }
}  // namespace detail

inline std::vector<SubstringOccurrence> factor_substrings(Walk const& w) {
  return detail::occurrences(w, OccurrenceKind::factor);
}

inline std::vector<SubstringOccurrence> image_substrings(Walk const& w) {
  return detail::occurrences(w, OccurrenceKind::image);
}

inline Walk substring(BoundQuiver const& bq, Walk const& w, SubstringOccurrence const& occ) {
  auto vertices = walk_vertices(bq, w);
  Walk out      = trivial_walk(vertices.at(occ.start));
  out.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(occ.start),
                     w.letters.begin() + static_cast<std::ptrdiff_t>(occ.end));
  return out;
}

// dim Hom(M(s2), M(s1)): the number of pairs (q, p, identification) with q a
// factor occurrence in s2, p an image occurrence in s1 and q = p or
// q = p^-1. A trivial q admits one identification. A nontrivial string never
// equals its own inverse, so the two identifications never coincide.
inline std::uint64_t hom_dim(BoundQuiver const& bq, Walk const& s2, Walk const& s1) {
  require_string_pair(bq);
  for (Walk const* s : {&s2, &s1}) {
    if (auto v = detail::check_walk(bq, *s); !v) {
      throw Error(ErrorKind::InvalidWalk, v.reason);
    }
  }
  auto const v2 = walk_vertices(bq, s2);
  auto const v1 = walk_vertices(bq, s1);
  std::uint64_t count = 0;
  for (auto const& q : factor_substrings(s2)) {
    std::size_t const len = q.end - q.start;
    for (auto const& p : image_substrings(s1)) {
      if (p.end - p.start != len) {
        continue;
      }
      if (len == 0) {
        count += v2[q.start] == v1[p.start] ? 1 : 0;
        continue;
      }
      bool direct = v2[q.start] == v1[p.start];
      bool mirror = v2[q.start] == v1[p.end];
      for (std::size_t k = 0; k < len && (direct || mirror); ++k) {
        Letter lq = s2.letters[q.start + k];
        direct    = direct && lq == s1.letters[p.start + k];
        mirror    = mirror && lq == s1.letters[p.end - 1 - k].inverted();
      }
      count += (direct ? 1 : 0) + (mirror ? 1 : 0);
    }
  }
  return count;
}

struct StringModuleHandle {
  enum class Label { projective, arrow, simple, plain };

  CanonicalForm string;
  Label         label = Label::plain;
  std::size_t   index = 0;  // the vertex or arrow named by the label
  Walk          walk;       // the walk as constructed, before canonicalization
};

inline StringModuleHandle projective_module(BoundQuiver const& bq, VertexIndex v) {
  Walk w = projective_string(bq, v);
  return {canonical_string(bq, w), StringModuleHandle::Label::projective, v, w};
}

inline StringModuleHandle arrow_module(BoundQuiver const& bq, ArrowIndex alpha) {
  Walk w = arrow_module_string(bq, alpha);
  return {canonical_string(bq, w), StringModuleHandle::Label::arrow, alpha, w};
}

}  // namespace sagq

#endif  // SAGQ_STRMOD_HPP_
