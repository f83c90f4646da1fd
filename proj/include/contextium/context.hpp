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

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "contextium/pauli.hpp"

namespace contextium {

inline constexpr int kMinEnumerationQubits = 2;
inline constexpr int kMaxEnumerationQubits = 6;

/**
 * Three distinct, pairwise compatible, non-identity Pauli strings whose
 * operator product is sign * identity. Members are kept sorted by key().
 */
class Context {
 public:
  /// Validates and sorts. Throws InvariantError (or DimensionError).
  static Context make(const PauliString& a, const PauliString& b,
                      const PauliString& c);
  /// The trio {a, b, pauli part of a*b}. Throws if a, b do not commute.
  static Context from_pair(const PauliString& a, const PauliString& b);

  const std::array<PauliString, 3>& members() const { return members_; }
  const PauliString& operator[](std::size_t i) const { return members_[i]; }
  int sign() const { return sign_; }
  bool negative() const { return sign_ < 0; }
  int num_qubits() const { return members_[0].num_qubits(); }
  bool contains(const PauliString& p) const;

  friend bool operator==(const Context& a, const Context& b) {
    return a.members_ == b.members_;
  }
  friend std::strong_ordering operator<=>(const Context& a, const Context& b) {
    return a.members_ <=> b.members_;
  }

 private:
  Context(std::array<PauliString, 3> members, int sign)
      : members_(members), sign_(sign) {}

  std::array<PauliString, 3> members_;
  int sign_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Context& c);

/// Column classes of a context written as a 3 x n table (rows are members in
/// stored order).
struct ColumnClassProfile {
  int clockwise = 0;          // X -> Z -> Y reading down the column
  int counter_clockwise = 0;  // X -> Y -> Z reading down the column
  int all_identity = 0;
  int single_pauli = 0;       // one Pauli, two I
  int pair_with_identity = 0; // two identical Paulis, one I
  int other = 0;              // anything else (never for a valid context)

  /// Sign predicted from the profile: negative iff a+b is even and
  /// floor(a/2) + floor(b/2) is odd.
  int predicted_sign() const;
};

ColumnClassProfile column_profile(const Context& c);

/// Streams every context on n qubits exactly once, in ascending order of the
/// (first, second) member keys. Throws CapabilityError unless 2 <= n <= 6.
void for_each_context(int n, const std::function<void(const Context&)>& visit);
std::vector<Context> enumerate_contexts(int n);

/// (4^n - 1)(4^{n-1} - 1) / 3. Valid for 2 <= n <= 16.
std::uint64_t count_contexts_closed_form(int n);
/// Column-class sum for negative contexts. Valid for 2 <= n <= 16.
std::uint64_t count_negative_closed_form(int n);

struct ContextCounts {
  std::uint64_t total = 0;
  std::uint64_t negative = 0;
};
/// Counts by streaming enumeration (no storage).
ContextCounts count_by_enumeration(int n);

}  // namespace contextium
