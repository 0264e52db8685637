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

// Reading and writing bound quivers: the line-oriented quiver DSL, its JSON
// mirror, and Graphviz DOT export.
//
//   quiver
//   vertices: 1 2 3
//   arrows:
//   a: 1 -> 2
//   b: 2 -> 3
//   relations:
//   a b
//
// '#' starts a comment that runs to the end of the line.

#ifndef SAGQ_IO_HPP_
#define SAGQ_IO_HPP_

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "quiver.hpp"

#include "json.hpp"

namespace sagq {

namespace detail {
  struct Token {
    std::string text;
    std::size_t column;  // 1-based
  };

  // Splits one DSL line into identifiers, ":" and "->".
  inline std::vector<Token> tokenize_line(std::string_view line,
                                          std::size_t      line_number) {
    std::vector<Token> tokens;
    std::size_t        i = 0;
    while (i < line.size()) {
      char c = line[i];
      if (c == '#') {
        break;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == ':') {
        tokens.push_back({":", i + 1});
        ++i;
      } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
        tokens.push_back({"->", i + 1});
        i += 2;
      } else if (is_token_char(c)) {
        std::size_t j = i;
        while (j < line.size() && is_token_char(line[j])) {
          ++j;
        }
        tokens.push_back({std::string(line.substr(i, j - i)), i + 1});
        i = j;
      } else {
        throw ParseError(line_number, i + 1,
                         std::string("unexpected character '") + c + "'");
      }
    }
    return tokens;
  }

  inline bool is_identifier(Token const& t) {
    return t.text != ":" && t.text != "->";
  }

  inline bool is_header(std::vector<Token> const& tokens, std::string_view name) {
    return tokens.size() >= 2 && tokens[0].text == name && tokens[1].text == ":";
  }
}  // namespace detail

inline BoundQuiver parse_quiver(std::string_view text) {
  using detail::Token;
  enum class Section { start, header, vertices, arrows, relations };
  Section                               section = Section::start;
  std::vector<std::string>              vertices;
  std::vector<BoundQuiver::ArrowSpec>   arrows;
  std::vector<std::vector<std::string>> relations;
  std::size_t                           line_number = 0;
  std::size_t                           begin       = 0;

  auto expect = [&](bool ok, Token const& at, std::string const& what) {
    if (!ok) {
      throw ParseError(line_number, at.column, what);
    }
  };

  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    ++line_number;
    begin = end + 1;
    auto tokens = detail::tokenize_line(line, line_number);
    if (tokens.empty()) {
      continue;
    }
    switch (section) {
      case Section::start:
        expect(tokens.size() == 1 && tokens[0].text == "quiver", tokens[0],
               "document must start with 'quiver'");
        section = Section::header;
        break;
      case Section::header: {
        expect(detail::is_header(tokens, "vertices"), tokens[0],
               "expected 'vertices:'");
        expect(tokens.size() > 2, tokens[1], "expected at least one vertex");
        for (std::size_t i = 2; i < tokens.size(); ++i) {
          expect(detail::is_identifier(tokens[i]), tokens[i],
                 "expected a vertex id");
          vertices.push_back(tokens[i].text);
        }
        section = Section::vertices;
        break;
      }
      case Section::vertices:
        expect(detail::is_header(tokens, "arrows") && tokens.size() == 2,
               tokens[0], "expected 'arrows:' on its own line");
        section = Section::arrows;
        break;
      case Section::arrows:
        if (detail::is_header(tokens, "relations") && tokens.size() == 2) {
          section = Section::relations;
          break;
        }
        expect(tokens.size() == 5, tokens[0],
               "expected '<arrow>: <source> -> <target>'");
        expect(detail::is_identifier(tokens[0]), tokens[0], "expected an arrow id");
        expect(tokens[1].text == ":", tokens[1], "expected ':'");
        expect(detail::is_identifier(tokens[2]), tokens[2], "expected a vertex id");
        expect(tokens[3].text == "->", tokens[3], "expected '->'");
        expect(detail::is_identifier(tokens[4]), tokens[4], "expected a vertex id");
        arrows.push_back({tokens[0].text, tokens[2].text, tokens[4].text});
        break;
      case Section::relations: {
        std::vector<std::string> word;
        for (auto const& t : tokens) {
          expect(detail::is_identifier(t), t, "expected an arrow id");
          word.push_back(t.text);
        }
        relations.push_back(std::move(word));
        break;
      }
    }
  }
  if (section == Section::start || section == Section::header
      || section == Section::vertices) {
    throw ParseError(line_number, 1, "unexpected end of document");
  }
  return BoundQuiver::make(vertices, arrows, relations);
}

inline BoundQuiver parse_quiver_json(nlohmann::json const& doc) {
  try {
    std::vector<std::string>              vertices;
    std::vector<BoundQuiver::ArrowSpec>   arrows;
    std::vector<std::vector<std::string>> relations;
    for (auto const& v : doc.at("vertices")) {
      vertices.push_back(v.get<std::string>());
    }
    for (auto const& a : doc.at("arrows")) {
      arrows.push_back({a.at("id").get<std::string>(),
                        a.at("source").get<std::string>(),
                        a.at("target").get<std::string>()});
    }
    if (doc.contains("relations")) {
      for (auto const& r : doc.at("relations")) {
        relations.push_back(r.get<std::vector<std::string>>());
      }
    }
    return BoundQuiver::make(vertices, arrows, relations);
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(1, 1, e.what());
  }
}

inline BoundQuiver parse_quiver_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(1, e.byte, e.what());
  }
  return parse_quiver_json(doc);
}

// Accepts either format: JSON documents start with '{'.
inline BoundQuiver parse_quiver_any(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return parse_quiver_json(text);
  }
  return parse_quiver(text);
}

inline std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline BoundQuiver load_quiver(std::string const& path) {
  return parse_quiver_any(read_file(path));
}

inline std::string to_dsl(BoundQuiver const& bq) {
  std::ostringstream out;
  out << "quiver\nvertices:";
  for (auto const& v : bq.vertices()) {
    out << ' ' << v;
  }
  out << "\narrows:\n";
  for (auto const& a : bq.arrows()) {
    out << a.id << ": " << bq.vertex_id(a.source) << " -> "
        << bq.vertex_id(a.target) << '\n';
  }
  out << "relations:\n";
  for (auto const& r : bq.relations()) {
    out << bq.text(r) << '\n';
  }
  return out.str();
}

inline nlohmann::json to_json(BoundQuiver const& bq) {
  nlohmann::json doc;
  doc["vertices"] = bq.vertices();
  doc["arrows"]   = nlohmann::json::array();
  for (auto const& a : bq.arrows()) {
    doc["arrows"].push_back({{"id", a.id},
                             {"source", bq.vertex_id(a.source)},
                             {"target", bq.vertex_id(a.target)}});
  }
  doc["relations"] = nlohmann::json::array();
  for (auto const& r : bq.relations()) {
    std::vector<std::string> word;
    for (ArrowIndex a : r) {
      word.push_back(bq.arrow_id(a));
    }
    doc["relations"].push_back(word);
  }
  return doc;
}

// One node per vertex, one solid edge per arrow; each relation is drawn as a
// chain of dashed edges through the vertices it visits.
inline std::string to_dot(BoundQuiver const& bq, std::string_view name = "Q") {
  auto quote = [](std::string const& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') {
        out += '\\';
      }
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "digraph " << quote(std::string(name)) << " {\n";
  for (auto const& v : bq.vertices()) {
    out << "  " << quote(v) << ";\n";
  }
  for (auto const& a : bq.arrows()) {
    out << "  " << quote(bq.vertex_id(a.source)) << " -> "
        << quote(bq.vertex_id(a.target)) << " [label=" << quote(a.id) << "];\n";
  }
  for (std::size_t i = 0; i < bq.relations().size(); ++i) {
    auto const& r = bq.relations()[i];
    for (std::size_t j = 0; j < r.size(); ++j) {
      out << "  " << quote(bq.vertex_id(bq.source(r[j]))) << " -> "
          << quote(bq.vertex_id(bq.target(r[j])))
          << " [style=dashed, color=gray, arrowhead=none, constraint=false";
      if (j == 0) {
        out << ", label=" << quote("r" + std::to_string(i + 1) + ": " + bq.text(r));
      }
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace sagq

#endif  // SAGQ_IO_HPP_
