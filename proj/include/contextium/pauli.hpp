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

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace contextium {

inline constexpr int kMaxQubits = 16;

/// A power of i: value 0..3 stands for {+1, +i, -1, -i}.
struct Phase {
  std::uint8_t value = 0;

  constexpr bool is_real() const { return (value & 1) == 0; }
  /// +1 or -1; only meaningful when is_real().
  constexpr int sign() const { return value == 0 ? 1 : -1; }
  constexpr Phase operator+(Phase o) const {
    return Phase{static_cast<std::uint8_t>((value + o.value) & 3)};
  }
  friend constexpr bool operator==(Phase, Phase) = default;
};

/**
 * Unsigned n-qubit tensor product of {I, X, Y, Z}.
 *
 * Qubit q (0-based, leftmost character is qubit 0) lives in bit q of both
 * masks: (x, z) = (0,0) I, (1,0) X, (1,1) Y, (0,1) Z. With this encoding the
 * string stands for prod_q i^{x_q z_q} X^{x_q} Z^{z_q}, i.e. Y = iXZ.
 *
 * The identity string is representable (it appears as a product) but is not
 * an observable.
 */
class PauliString {
 public:
  constexpr PauliString() = default;
  /// Throws DimensionError if n is out of [1, 16] or masks use high bits.
  PauliString(int n, std::uint32_t x_mask, std::uint32_t z_mask);

  /// "IXYZ" style text. Throws ParseError.
  static PauliString parse(std::string_view text);
  static PauliString identity(int n);
  /// Inverse of key(): key = (x << n) | z.
  static PauliString from_key(int n, std::uint64_t key);

  int num_qubits() const { return n_; }
  std::uint32_t x_mask() const { return x_; }
  std::uint32_t z_mask() const { return z_; }
  bool is_identity() const { return x_ == 0 && z_ == 0; }

  /// One of 'I', 'X', 'Y', 'Z' for 0-based qubit q.
  char at(int q) const;
  /// Number of non-identity factors.
  int weight() const;

  /// Dense key ordering strings lexicographically by (x_mask, z_mask).
  /// XOR of keys is the key of the product.
  std::uint64_t key() const { return (std::uint64_t{x_} << n_) | z_; }
  /// Observable index in [0, 4^n - 2]. Throws InvariantError on identity.
  std::uint64_t observable_index() const;

  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend std::strong_ordering operator<=>(const PauliString& a,
                                          const PauliString& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    return a.z_ <=> b.z_;
  }

 private:
  std::uint8_t n_ = 0;
  std::uint32_t x_ = 0;
  std::uint32_t z_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PauliString& p);

/// p * q = i^phase * r. Throws DimensionError on mismatched n.
std::pair<Phase, PauliString> multiply(const PauliString& p, const PauliString& q);

/// Symplectic form: true iff the strings commute.
bool commutes(const PauliString& p, const PauliString& q);

/// 4^n - 1.
std::uint64_t observable_count(int n);

/// Number of observables compatible with any fixed observable: 2(4^{n-1} - 1).
std::uint64_t compatible_count(int n);

/// Throws if p is the identity or has a different qubit count than n.
void require_observable(const PauliString& p, int n);

}  // namespace contextium

template <>
struct std::hash<contextium::PauliString> {
  std::size_t operator()(const contextium::PauliString& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.key() * 17 + p.num_qubits());
  }
};
