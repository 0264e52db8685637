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

// Axiom checks for string pairs, almost gentle pairs, SAG pairs and gentle
// pairs.

#ifndef SAGQ_CLASSIFY_HPP_
#define SAGQ_CLASSIFY_HPP_

#include <string>
#include <vector>

#include "error.hpp"
#include "quiver.hpp"

namespace sagq {

enum class Side { Right, Left };

// An arrow with two admissible continuations on one side.
struct S2Violation {
  ArrowIndex arrow;
  Side       side;
  ArrowIndex first;
  ArrowIndex second;

  bool operator==(S2Violation const&) const = default;
};

struct Violation {
  std::string axiom;    // "S1", "S2_R", "S2_L", "AG2", "gentle_R", "gentle_L"
  std::string witness;  // vertex id, arrow pair or relation word

  bool operator==(Violation const&) const = default;
};

struct Classification {
  bool                   is_string        = true;
  bool                   is_almost_gentle = true;
  bool                   is_sag           = true;
  bool                   is_gentle        = true;
  std::vector<Violation> violations;
};

namespace detail {
  inline bool pair_in_ideal(BoundQuiver const& bq, ArrowIndex a, ArrowIndex b) {
    ArrowIndex word[2] = {a, b};
    return bq.contains_relation(word);
  }
}  // namespace detail

// Vertices that are the source, or the target, of three or more arrows.
inline std::vector<VertexIndex> check_s1(BoundQuiver const& bq) {
  std::vector<VertexIndex> result;
  for (VertexIndex v = 0; v < bq.num_vertices(); ++v) {
    if (bq.out_arrows(v).size() > 2 || bq.in_arrows(v).size() > 2) {
      result.push_back(v);
    }
  }
  return result;
}

inline std::vector<S2Violation> check_s2(BoundQuiver const& bq) {
  std::vector<S2Violation> result;
  for (ArrowIndex a = 0; a < bq.num_arrows(); ++a) {
    std::vector<ArrowIndex> right, left;
    for (ArrowIndex b : bq.out_arrows(bq.target(a))) {
      if (!detail::pair_in_ideal(bq, a, b)) {
        right.push_back(b);
      }
    }
    for (ArrowIndex c : bq.in_arrows(bq.source(a))) {
      if (!detail::pair_in_ideal(bq, c, a)) {
        left.push_back(c);
      }
    }
    if (right.size() > 1) {
      result.push_back({a, Side::Right, right[0], right[1]});
    }
    if (left.size() > 1) {
      result.push_back({a, Side::Left, left[0], left[1]});
    }
  }
  return result;
}

inline Classification classify(BoundQuiver const& bq) {
  Classification c;
  auto           pair_text = [&](ArrowIndex x, ArrowIndex y) {
    return bq.arrow_id(x) + " " + bq.arrow_id(y);
  };

  bool s1 = true, s2 = true, ag2 = true, gentle = true;
  for (VertexIndex v : check_s1(bq)) {
    s1 = false;
    c.violations.push_back({"S1", bq.vertex_id(v)});
  }
  for (auto const& v : check_s2(bq)) {
    s2 = false;
    if (v.side == Side::Right) {
      c.violations.push_back({"S2_R", pair_text(v.arrow, v.first) + " ; "
                                          + pair_text(v.arrow, v.second)});
    } else {
      c.violations.push_back({"S2_L", pair_text(v.first, v.arrow) + " ; "
                                          + pair_text(v.second, v.arrow)});
    }
  }
  for (auto const& r : bq.relations()) {
    if (r.size() != 2) {
      ag2 = false;
      c.violations.push_back({"AG2", bq.text(r)});
    }
  }
  c.is_string        = s1 && s2;
  c.is_almost_gentle = s2 && ag2;
  c.is_sag           = c.is_string && c.is_almost_gentle;

  // Gentle: additionally at most one relation on each side of each arrow.
  for (ArrowIndex a = 0; a < bq.num_arrows(); ++a) {
    std::vector<ArrowIndex> right, left;
    for (ArrowIndex b : bq.out_arrows(bq.target(a))) {
      if (detail::pair_in_ideal(bq, a, b)) {
        right.push_back(b);
      }
    }
    for (ArrowIndex g : bq.in_arrows(bq.source(a))) {
      if (detail::pair_in_ideal(bq, g, a)) {
        left.push_back(g);
      }
    }
    if (right.size() > 1) {
      gentle = false;
      c.violations.push_back({"gentle_R", pair_text(a, right[0]) + " ; "
                                              + pair_text(a, right[1])});
    }
    if (left.size() > 1) {
      gentle = false;
      c.violations.push_back({"gentle_L", pair_text(left[0], a) + " ; "
                                              + pair_text(left[1], a)});
    }
  }
  c.is_gentle = c.is_sag && gentle;
  return c;
}

inline bool is_string_pair(BoundQuiver const& bq) {
  return check_s1(bq).empty() && check_s2(bq).empty();
}

inline bool is_sag_pair(BoundQuiver const& bq) {
  if (!is_string_pair(bq)) {
    return false;
  }
  for (auto const& r : bq.relations()) {
    if (r.size() != 2) {
      return false;
    }
  }
  return true;
}

inline void require_string_pair(BoundQuiver const& bq) {
  if (!is_string_pair(bq)) {
    throw Error(ErrorKind::NotStringPair,
                "the bound quiver violates (S1) or (S2)");
  }
}

inline void require_sag(BoundQuiver const& bq) {
  if (!is_sag_pair(bq)) {
    throw Error(ErrorKind::NotSAG, "the bound quiver is not a SAG pair");
  }
}

}  // namespace sagq

#endif  // SAGQ_CLASSIFY_HPP_
