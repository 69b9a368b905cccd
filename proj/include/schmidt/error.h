// Copyright 2026 The schmidt-games Authors. All rights reserved.
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

#ifndef SCHMIDT_ERROR_H_
#define SCHMIDT_ERROR_H_

#include <stdexcept>
#include <string>

namespace schmidt {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arguments drawn from different spaces (line vs. R^n vs. Baire, or
// mismatched dimensions).
class SpaceMismatchError : public Error {
 public:
  explicit SpaceMismatchError(const std::string& what) : Error(what) {}
};

// A precondition on a parameter or argument does not hold.
class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& what) : Error(what) {}
};

// Malformed textual input. `field` names the offending token or key.
class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class StrategyFailureKind {
  kNoCell,           // incoming center lies in no cell of a simple strategy
  kOverlapDetected,  // incoming center lies in more than one cell
  kSnapFailure,      // dense-set snapping found no point within epsilon
  kPrecondition,     // the strategy was asked to act outside its contract
  kInternal,
};

const char* StrategyFailureKindName(StrategyFailureKind kind);

// Raised from inside Strategy::Next. The engine records it as a resignation
// by the player whose strategy failed.
class StrategyFailure : public Error {
 public:
  StrategyFailure(StrategyFailureKind kind, const std::string& what)
      : Error(std::string(StrategyFailureKindName(kind)) + ": " + what),
        kind_(kind) {}
  StrategyFailureKind kind() const { return kind_; }

 private:
  StrategyFailureKind kind_;
};

}  // namespace schmidt

#endif  // SCHMIDT_ERROR_H_
