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

#ifndef SAGQ_ERROR_HPP_
#define SAGQ_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sagq {

enum class ErrorKind {
  ParseError,
  InvalidId,
  DuplicateId,
  DanglingEndpoint,
  NonComposableRelation,
  RelationTooShort,
  UnknownVertex,
  UnknownArrow,
  InvalidPath,
  InvalidWalk,
  InfiniteDimensional,
  NotStringPair,
  NotSAG,
  NotLeftForbidden,
  NotForbiddenCycle,
  GenerationExhausted,
  VerificationFailed,
};

// Stable token printed as the first word of CLI diagnostics.
constexpr std::string_view tag(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidId: return "InvalidId";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::NonComposableRelation: return "NonComposableRelation";
    case ErrorKind::RelationTooShort: return "RelationTooShort";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownArrow: return "UnknownArrow";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::InvalidWalk: return "InvalidWalk";
    case ErrorKind::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorKind::NotStringPair: return "NotStringPair";
    case ErrorKind::NotSAG: return "NotSAG";
    case ErrorKind::NotLeftForbidden: return "NotLeftForbidden";
    case ErrorKind::NotForbiddenCycle: return "NotForbiddenCycle";
    case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& message)
      : std::runtime_error(std::string(tag(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Errors raised while reading a quiver document rather than while
  // computing with one.
  bool is_input_error() const noexcept {
    switch (kind_) {
      case ErrorKind::ParseError:
      case ErrorKind::InvalidId:
      case ErrorKind::DuplicateId:
      case ErrorKind::DanglingEndpoint:
      case ErrorKind::NonComposableRelation:
      case ErrorKind::RelationTooShort:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& message)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column "
                  + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace sagq

#endif  // SAGQ_ERROR_HPP_
