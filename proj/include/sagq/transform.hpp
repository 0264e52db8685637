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

// The R-bound quiver of a left forbidden arrow index R: every alpha in R is
// split into alpha_L : s(alpha) -> v_alpha and alpha_R : v_alpha -> t(alpha)
// through a new vertex standing for the module alpha*A, and every relation
// a_1 ... a_n becomes (a_1)_R a_2^x ... a_{n-1}^x (a_n)_L.

#ifndef SAGQ_TRANSFORM_HPP_
#define SAGQ_TRANSFORM_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bands.hpp"
#include "classify.hpp"
#include "error.hpp"
#include "forbidden.hpp"
#include "quiver.hpp"
#include "strmod.hpp"
#include "walk.hpp"

namespace sagq {

// A set of left forbidden arrows, in declaration order.
class RIndex {
 public:
  RIndex() = default;

  std::vector<ArrowIndex> const& arrows() const noexcept { return arrows_; }
  bool contains(ArrowIndex a) const {
    return std::binary_search(arrows_.begin(), arrows_.end(), a);
  }
  std::size_t size() const noexcept { return arrows_.size(); }
  bool        empty() const noexcept { return arrows_.empty(); }

 private:
  friend RIndex validate_index(BoundQuiver const&, std::vector<ArrowIndex>);
  explicit RIndex(std::vector<ArrowIndex> arrows) : arrows_(std::move(arrows)) {}

  std::vector<ArrowIndex> arrows_;
};

inline RIndex validate_index(BoundQuiver const& bq, std::vector<ArrowIndex> arrows) {
  auto const lf = left_forbidden_arrows(bq);
  std::sort(arrows.begin(), arrows.end());
  arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
  for (ArrowIndex a : arrows) {
    if (a >= bq.num_arrows()) {
      throw Error(ErrorKind::UnknownArrow, "arrow index out of range");
    }
    if (!std::binary_search(lf.begin(), lf.end(), a)) {
      throw Error(ErrorKind::NotLeftForbidden,
                  "'" + bq.arrow_id(a) + "' is not a left forbidden arrow");
    }
  }
  return RIndex(std::move(arrows));
}

inline RIndex validate_index(BoundQuiver const& bq, std::vector<std::string> const& ids) {
  std::vector<ArrowIndex> arrows;
  for (auto const& id : ids) {
    arrows.push_back(bq.arrow_index(id));
  }
  return validate_index(bq, std::move(arrows));
}

struct TransformResult {
  BoundQuiver source;
  BoundQuiver quiver;
  RIndex      index;
  // Indexed by arrows of `source`.
  std::vector<std::optional<VertexIndex>> split_vertex;  // v_alpha
  std::vector<std::optional<ArrowIndex>>  left_part;     // alpha_L
  std::vector<std::optional<ArrowIndex>>  right_part;    // alpha_R
  std::vector<std::optional<ArrowIndex>>  passthrough;   // alpha not in R
  // Vertices of `source` keep their index in `quiver`.
};

namespace detail {
  // `base`, then base1, base2, ... until unused.
  inline std::string fresh_id(std::string const&               base,
                              std::unordered_set<std::string>& used) {
    std::string id = base;
    for (std::size_t k = 1; used.contains(id); ++k) {
      id = base + std::to_string(k);
    }
    used.insert(id);
    return id;
  }
}  // namespace detail

inline TransformResult r_transform(BoundQuiver const& bq, RIndex const& index) {
  for (ArrowIndex a : index.arrows()) {  // an RIndex from another quiver
    if (a >= bq.num_arrows()) {
      throw Error(ErrorKind::UnknownArrow, "index does not belong to this quiver");
    }
  }
  std::size_t const m = bq.num_arrows();
  TransformResult   tr{bq, BoundQuiver{}, index, std::vector<std::optional<VertexIndex>>(m),
                     std::vector<std::optional<ArrowIndex>>(m),
                     std::vector<std::optional<ArrowIndex>>(m),
                     std::vector<std::optional<ArrowIndex>>(m)};

  std::unordered_set<std::string> used(bq.vertices().begin(), bq.vertices().end());
  for (auto const& a : bq.arrows()) {
    used.insert(a.id);
  }

  std::vector<std::string> vertices = bq.vertices();
  for (ArrowIndex a : index.arrows()) {
    tr.split_vertex[a] = vertices.size();
    vertices.push_back(detail::fresh_id("v_" + bq.arrow_id(a), used));
  }

  std::vector<Arrow> arrows;
  for (ArrowIndex a = 0; a < m; ++a) {
    Arrow const& old = bq.arrow(a);
    if (index.contains(a)) {
      VertexIndex mid = *tr.split_vertex[a];
      tr.left_part[a] = arrows.size();
      arrows.push_back(Arrow{detail::fresh_id(old.id + "_L", used), old.source, mid});
      tr.right_part[a] = arrows.size();
      arrows.push_back(Arrow{detail::fresh_id(old.id + "_R", used), mid, old.target});
    } else {
      tr.passthrough[a] = arrows.size();
      arrows.push_back(old);
    }
  }

  auto whole = [&](ArrowIndex a, std::vector<ArrowIndex>& out) {
    if (index.contains(a)) {
      out.push_back(*tr.left_part[a]);
      out.push_back(*tr.right_part[a]);
    } else {
      out.push_back(*tr.passthrough[a]);
    }
  };
  auto right_of = [&](ArrowIndex a) {
    return index.contains(a) ? *tr.right_part[a] : *tr.passthrough[a];
  };
  auto left_of = [&](ArrowIndex a) {
    return index.contains(a) ? *tr.left_part[a] : *tr.passthrough[a];
  };

  std::vector<std::vector<ArrowIndex>> relations;
  for (auto const& r : bq.relations()) {
    std::vector<ArrowIndex> image{right_of(r.front())};
    for (std::size_t i = 1; i + 1 < r.size(); ++i) {
      whole(r[i], image);
    }
    image.push_back(left_of(r.back()));
    relations.push_back(std::move(image));
  }
  tr.quiver = BoundQuiver(std::move(vertices), std::move(arrows), std::move(relations));
  return tr;
}

inline std::vector<Letter> lift_letters(TransformResult const&     tr,
                                        std::vector<Letter> const& letters) {
  std::vector<Letter> out;
  for (Letter l : letters) {
    if (!tr.index.contains(l.arrow)) {
      out.push_back(Letter{*tr.passthrough[l.arrow], l.inverse});
    } else if (!l.inverse) {
      out.push_back(fwd(*tr.left_part[l.arrow]));
      out.push_back(fwd(*tr.right_part[l.arrow]));
    } else {
      out.push_back(inv(*tr.right_part[l.arrow]));
      out.push_back(inv(*tr.left_part[l.arrow]));
    }
  }
  return out;
}

// Carries a string of the source quiver to the transformed quiver.
inline Walk lift_walk(TransformResult const& tr, Walk const& w) {
  if (auto v = detail::check_walk(tr.source, w); !v) {
    throw Error(ErrorKind::InvalidWalk, v.reason);
  }
  return Walk{w.start, lift_letters(tr, w.letters)};
}

inline CyclicWalk lift_walk(TransformResult const& tr, CyclicWalk const& cw) {
  if (auto v = detail::check_band(tr.source, cw); !v) {
    throw Error(ErrorKind::InvalidWalk, v.reason);
  }
  return CyclicWalk{lift_letters(tr, cw.letters)};
}

// The bound quiver of the Cohen-Macaulay Auslander algebra of a SAG algebra:
// the transform by the perfect index.
inline TransformResult cma(BoundQuiver const& bq) {
  require_sag(bq);
  require_finite_dimensional(bq);
  return r_transform(bq, validate_index(bq, perfect_index(bq).arrows));
}

struct TransformedAlgebraReport {
  TransformResult result;
  std::uint64_t   dim_source_endo = 0;  // dim End(A + sum of alpha*A), by hom counting
  std::uint64_t   dim_transformed = 0;  // dim of the transformed bound quiver algebra

  bool dimensions_agree() const noexcept { return dim_source_endo == dim_transformed; }
};

// The summand strings of M_R = A + sum_{alpha in R} alpha*A.
inline std::vector<StringModuleHandle> summand_modules(BoundQuiver const& bq,
                                                       RIndex const&      index) {
  std::vector<StringModuleHandle> out;
  for (VertexIndex v = 0; v < bq.num_vertices(); ++v) {
    out.push_back(projective_module(bq, v));
  }
  for (ArrowIndex a : index.arrows()) {
    out.push_back(arrow_module(bq, a));
  }
  return out;
}

inline TransformedAlgebraReport verify_endo_dimension(BoundQuiver const& bq,
                                                      RIndex const&      index) {
  require_sag(bq);
  require_finite_dimensional(bq);
  TransformedAlgebraReport report{r_transform(bq, index)};
  auto const summands = summand_modules(bq, index);
  for (auto const& x : summands) {
    for (auto const& y : summands) {
      report.dim_source_endo += hom_dim(bq, x.walk, y.walk);
    }
  }
  report.dim_transformed = algebra_dim(report.result.quiver);
  return report;
}

// An arrow alpha in R next to an arrow beta != alpha with the same target and
// beta*A simple. Then alpha*A maps onto its top, which embeds into
// P(s(beta)) via beta; that map is irreducible in add(M_R) but has no arrow in
// the R-bound quiver, so the two dimensions of the report differ. On random
// SAG inputs this condition matches the disagreements exactly.
struct EndoObstruction {
  ArrowIndex alpha;
  ArrowIndex beta;
};

inline std::optional<EndoObstruction> endo_dimension_obstruction(BoundQuiver const& bq,
                                                                 RIndex const&      index) {
  for (ArrowIndex alpha : index.arrows()) {
    for (ArrowIndex beta : bq.in_arrows(bq.target(alpha))) {
      if (beta == alpha) {
        continue;
      }
      bool dead = true;
      for (ArrowIndex g : bq.out_arrows(bq.target(beta))) {
        dead = dead && detail::pair_in_ideal(bq, beta, g);
      }
      if (dead) {
        return EndoObstruction{alpha, beta};
      }
    }
  }
  return std::nullopt;
}

}  // namespace sagq

#endif  // SAGQ_TRANSFORM_HPP_
