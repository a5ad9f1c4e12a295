// Copyright 2026 The womlat Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace womlat {

enum class ErrorKind {
  DuplicateLabel,
  UnknownLabel,
  EmptyCarrier,
  NotAntisymmetric,
  NotALattice,
  CapExceeded,
  PreconditionViolated,
  InvariantFailed,
  MissingOperation,
  MissingConstant,
  UnboundVariable,
  SyntaxError,
  UnknownSymbol,
  UnknownFixture,
  InvalidTable,
  InvalidMeasure,
  FormatError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::EmptyCarrier: return "EmptyCarrier";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InvariantFailed: return "InvariantFailed";
    case ErrorKind::MissingOperation: return "MissingOperation";
    case ErrorKind::MissingConstant: return "MissingConstant";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::InvalidMeasure: return "InvalidMeasure";
    case ErrorKind::FormatError: return "FormatError";
  }
  return "Unknown";
}

/// Every failure in the library is an Error carrying its kind and, where
/// one exists, the offending labels (cycle, lattice pair, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::string> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

/// Syntax errors additionally carry the byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(ErrorKind::SyntaxError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace womlat
