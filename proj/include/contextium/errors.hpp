// Copyright 2026 The Contextium Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace contextium {

/// Malformed Pauli text. `position()` is the 0-based index of the offending
/// character, or npos for length errors.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Operands on different qubit counts.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request outside what an operation supports (qubit caps, exhaustive
/// solver caps, n-specific constructions).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A domain object failed its structural invariants.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An assignment does not cover an observable used by an inequality.
class IncompleteAssignmentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Probabilities outside [0, 1] during a measurement update.
class StateCorruptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A noncontextual model beat the counting bound for the full inequality.
class BoundFalsifiedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace contextium
