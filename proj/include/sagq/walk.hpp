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

// Walks in arrows and formal inverses. A Walk houses a string, a CyclicWalk
// houses a band.

#ifndef SAGQ_WALK_HPP_
#define SAGQ_WALK_HPP_

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "classify.hpp"
#include "error.hpp"
#include "quiver.hpp"

namespace sagq {

// Ordered by arrow declaration order, direct before inverse.
struct Letter {
  ArrowIndex arrow   = 0;
  bool       inverse = false;

  Letter inverted() const noexcept { return Letter{arrow, !inverse}; }

  auto operator<=>(Letter const&) const = default;
};

inline Letter fwd(ArrowIndex a) { return Letter{a, false}; }
inline Letter inv(ArrowIndex a) { return Letter{a, true}; }

inline VertexIndex letter_source(BoundQuiver const& bq, Letter l) {
  return l.inverse ? bq.target(l.arrow) : bq.source(l.arrow);
}

inline VertexIndex letter_target(BoundQuiver const& bq, Letter l) {
  return l.inverse ? bq.source(l.arrow) : bq.target(l.arrow);
}

// `start` is the first vertex; for the trivial walk it is the only one.
struct Walk {
  VertexIndex         start = 0;
  std::vector<Letter> letters;

  bool        trivial() const noexcept { return letters.empty(); }
  std::size_t size() const noexcept { return letters.size(); }

  bool operator==(Walk const&) const = default;
};

// Deterministic order: length, then letters, then start vertex.
inline bool operator<(Walk const& x, Walk const& y) {
  if (x.letters.size() != y.letters.size()) {
    return x.letters.size() < y.letters.size();
  }
  if (x.letters != y.letters) {
    return x.letters < y.letters;
  }
  return x.start < y.start;
}

struct CyclicWalk {
  std::vector<Letter> letters;

  std::size_t size() const noexcept { return letters.size(); }

  bool operator==(CyclicWalk const&) const = default;
  auto operator<=>(CyclicWalk const&) const = default;
};

using CanonicalForm = Walk;

struct Validation {
  bool        ok = true;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }

  static Validation fail(std::string why) { return {false, std::move(why)}; }
};

inline Walk trivial_walk(VertexIndex v) { return Walk{v, {}}; }

inline Walk make_walk(BoundQuiver const& bq, std::vector<Letter> letters) {
  if (letters.empty()) {
    throw Error(ErrorKind::InvalidWalk, "use trivial_walk for an empty walk");
  }
  VertexIndex start = letter_source(bq, letters.front());
  return Walk{start, std::move(letters)};
}

inline VertexIndex walk_end(BoundQuiver const& bq, Walk const& w) {
  return w.trivial() ? w.start : letter_target(bq, w.letters.back());
}

// Vertices x_0, ..., x_n visited by the walk.
inline std::vector<VertexIndex> walk_vertices(BoundQuiver const& bq, Walk const& w) {
  std::vector<VertexIndex> out{w.start};
  for (Letter l : w.letters) {
    out.push_back(letter_target(bq, l));
  }
  return out;
}

inline std::vector<Letter> inverse_letters(std::vector<Letter> const& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.push_back(it->inverted());
  }
  return out;
}

inline Walk inverse(BoundQuiver const& bq, Walk const& w) {
  return Walk{walk_end(bq, w), inverse_letters(w.letters)};
}

inline CyclicWalk inverse(CyclicWalk const& cw) {
  return CyclicWalk{inverse_letters(cw.letters)};
}

inline CyclicWalk rotate(CyclicWalk const& cw, std::size_t t) {
  CyclicWalk out = cw;
  if (!out.letters.empty()) {
    std::rotate(out.letters.begin(),
                out.letters.begin() + static_cast<std::ptrdiff_t>(t % out.size()),
                out.letters.end());
  }
  return out;
}

namespace detail {
  inline Validation check_letters_known(BoundQuiver const&         bq,
                                        std::vector<Letter> const& letters) {
    for (Letter l : letters) {
      if (l.arrow >= bq.num_arrows()) {
        throw Error(ErrorKind::UnknownArrow, "letter refers to an unknown arrow");
      }
    }
    return {};
  }

  // Checks that the run letters[begin, end) (all of one direction) avoids the
  // ideal when read as a path.
  inline bool run_is_relation_free(BoundQuiver const&         bq,
                                   std::vector<Letter> const& letters,
                                   std::size_t                begin,
                                   std::size_t                end) {
    std::vector<ArrowIndex> path;
    for (std::size_t i = begin; i < end; ++i) {
      path.push_back(letters[i].arrow);
    }
    if (letters[begin].inverse) {
      std::reverse(path.begin(), path.end());
    }
    return !bq.contains_relation(path);
  }

  // Walk invariants without the string-pair precondition.
  inline Validation check_walk(BoundQuiver const& bq, Walk const& w) {
    check_letters_known(bq, w.letters);
    if (w.start >= bq.num_vertices()) {
      throw Error(ErrorKind::UnknownVertex, "walk anchored at an unknown vertex");
    }
    if (w.trivial()) {
      return {};
    }
    auto const& ls = w.letters;
    if (letter_source(bq, ls.front()) != w.start) {
      return Validation::fail("walk does not start at its anchor vertex");
    }
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      if (letter_target(bq, ls[i]) != letter_source(bq, ls[i + 1])) {
        return Validation::fail("letters " + std::to_string(i + 1) + " and "
                                + std::to_string(i + 2) + " are not composable");
      }
      if (ls[i + 1] == ls[i].inverted()) {
        return Validation::fail("walk backtracks at letter " + std::to_string(i + 2));
      }
    }
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= ls.size(); ++i) {
      if (i == ls.size() || ls[i].inverse != ls[begin].inverse) {
        if (!run_is_relation_free(bq, ls, begin, i)) {
          return Validation::fail("run starting at letter " + std::to_string(begin + 1)
                                  + " contains a relation");
        }
        begin = i;
      }
    }
    return {};
  }

  inline bool is_proper_power(std::vector<Letter> const& letters) {
    std::size_t const n = letters.size();
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = d; i < n && periodic; ++i) {
        periodic = letters[i] == letters[i - d];
      }
      if (periodic) {
        return true;
      }
    }
    return false;
  }

  inline Validation check_band(BoundQuiver const& bq, CyclicWalk const& cw) {
    check_letters_known(bq, cw.letters);
    auto const& ls = cw.letters;
    std::size_t const n = ls.size();
    if (n == 0) {
      return Validation::fail("a band has at least one letter");
    }
    for (std::size_t i = 0; i < n; ++i) {
      Letter a = ls[i], b = ls[(i + 1) % n];
      if (letter_target(bq, a) != letter_source(bq, b)) {
        return Validation::fail("letters " + std::to_string(i + 1) + " and "
                                + std::to_string((i + 1) % n + 1)
                                + " are not composable");
      }
      if (b == a.inverted()) {
        return Validation::fail("walk backtracks at letter "
                                + std::to_string((i + 1) % n + 1));
      }
    }
    if (is_proper_power(ls)) {
      return Validation::fail("cyclic walk is a proper power");
    }
    // Start at a change of direction so that every run is read whole.
    std::size_t shift = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (ls[i].inverse != ls[(i + n - 1) % n].inverse) {
        shift = i;
        break;
      }
    }
    if (shift == n) {
      // One direction throughout: the periodic path must avoid I.
      std::vector<Letter> unrolled;
      std::size_t copies = bq.max_relation_length() / n + 2;
      for (std::size_t c = 0; c < copies; ++c) {
        unrolled.insert(unrolled.end(), ls.begin(), ls.end());
      }
      if (!run_is_relation_free(bq, unrolled, 0, unrolled.size())) {
        return Validation::fail("oriented cycle contains a relation");
      }
      return {};
    }
    auto rotated = rotate(cw, shift).letters;
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (i == n || rotated[i].inverse != rotated[begin].inverse) {
        if (!run_is_relation_free(bq, rotated, begin, i)) {
          return Validation::fail("a cyclic run contains a relation");
        }
        begin = i;
      }
    }
    return {};
  }
}  // namespace detail

inline Validation validate_string(BoundQuiver const& bq, Walk const& w) {
  require_string_pair(bq);
  return detail::check_walk(bq, w);
}

inline Validation validate_band(BoundQuiver const& bq, CyclicWalk const& cw) {
  require_string_pair(bq);
  return detail::check_band(bq, cw);
}

// Representative of {w, w^-1}: the lexicographically smaller letter word.
inline CanonicalForm canonical_string(BoundQuiver const& bq, Walk const& w) {
  if (w.trivial()) {
    return w;
  }
  Walk u = inverse(bq, w);
  return u.letters < w.letters ? u : w;
}

// Minimum over all rotations of both orientations.
inline CyclicWalk canonical_band(CyclicWalk const& cw) {
  CyclicWalk best = cw;
  for (CyclicWalk const& base : {cw, inverse(cw)}) {
    for (std::size_t t = 0; t < base.size(); ++t) {
      CyclicWalk r = rotate(base, t);
      if (r.letters < best.letters) {
        best = std::move(r);
      }
    }
  }
  return best;
}

inline std::string format_letter(BoundQuiver const& bq, Letter l) {
  return bq.arrow_id(l.arrow) + (l.inverse ? "^-1" : "");
}

// Letters separated by spaces, inverses suffixed "^-1". The trivial walk at
// v is written "@v".
inline std::string format_walk(BoundQuiver const& bq, Walk const& w) {
  if (w.trivial()) {
    return "@" + bq.vertex_id(w.start);
  }
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i != 0) {
      out += ' ';
    }
    out += format_letter(bq, w.letters[i]);
  }
  return out;
}

inline std::string format_band(BoundQuiver const& bq, CyclicWalk const& cw) {
  std::string out = "cycle(";
  for (std::size_t i = 0; i < cw.letters.size(); ++i) {
    out += (i == 0 ? "" : " ") + format_letter(bq, cw.letters[i]);
  }
  return out + ")";
}

namespace detail {
  inline std::vector<Letter> parse_letters(BoundQuiver const& bq,
                                           std::string_view   text) {
    // '·' (U+00B7, two bytes in UTF-8) separates like whitespace.
    std::string normalized;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (static_cast<unsigned char>(text[i]) == 0xC2 && i + 1 < text.size()
          && static_cast<unsigned char>(text[i + 1]) == 0xB7) {
        normalized += ' ';
        ++i;
      } else {
        normalized += text[i];
      }
    }
    std::vector<Letter> letters;
    std::size_t         i = 0;
    while (i < normalized.size()) {
      char c = normalized[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < normalized.size() && is_token_char(normalized[j])) {
        ++j;
      }
      if (j == i) {
        throw ParseError(1, i + 1, std::string("unexpected character '") + c
                                       + "' in walk");
      }
      std::string id = normalized.substr(i, j - i);
      bool        is_inverse = false;
      if (normalized.compare(j, 3, "^-1") == 0) {
        is_inverse = true;
        j += 3;
      }
      letters.push_back(Letter{bq.arrow_index(id), is_inverse});
      i = j;
    }
    return letters;
  }

  inline std::string_view trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
      return {};
    }
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }
}  // namespace detail

inline Walk parse_walk(BoundQuiver const& bq, std::string_view text) {
  text = detail::trim(text);
  if (!text.empty() && text.front() == '@') {
    return trivial_walk(bq.vertex_index(detail::trim(text.substr(1))));
  }
  auto letters = detail::parse_letters(bq, text);
  if (letters.empty()) {
    throw ParseError(1, 1, "empty walk; write '@v' for the trivial walk at v");
  }
  return make_walk(bq, std::move(letters));
}

inline CyclicWalk parse_band(BoundQuiver const& bq, std::string_view text) {
  text = detail::trim(text);
  if (text.starts_with("cycle(")) {
    if (!text.ends_with(")")) {
      throw ParseError(1, text.size(), "missing ')'");
    }
    text = text.substr(6, text.size() - 7);
  }
  auto letters = detail::parse_letters(bq, text);
  if (letters.empty()) {
    throw ParseError(1, 1, "empty band");
  }
  return CyclicWalk{std::move(letters)};
}

}  // namespace sagq

#endif  // SAGQ_WALK_HPP_
