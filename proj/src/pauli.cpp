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

#include "contextium/pauli.hpp"

#include <bit>
#include <ostream>

#include "contextium/errors.hpp"

namespace contextium {

namespace {

std::uint32_t low_mask(int n) {
  return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

void check_qubits(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw DimensionError("qubit count " + std::to_string(n) +
                         " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
}

void check_same_n(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionError("qubit count mismatch: " + p.str() + " vs " + q.str());
  }
}

}  // namespace

PauliString::PauliString(int n, std::uint32_t x_mask, std::uint32_t z_mask) {
  check_qubits(n);
  if ((x_mask | z_mask) & ~low_mask(n)) {
    throw DimensionError("mask bits above qubit " + std::to_string(n));
  }
  n_ = static_cast<std::uint8_t>(n);
  x_ = x_mask;
  z_ = z_mask;
}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty Pauli string", std::string_view::npos);
  }
  if (text.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw ParseError("Pauli string longer than " + std::to_string(kMaxQubits) +
                         " characters",
                     std::string_view::npos);
  }
  std::uint32_t x = 0;
  std::uint32_t z = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    switch (text[i]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw ParseError("invalid character '" + std::string(1, text[i]) +
                             "' at position " + std::to_string(i),
                         i);
    }
  }
  return PauliString(static_cast<int>(text.size()), x, z);
}

PauliString PauliString::identity(int n) { return PauliString(n, 0, 0); }

PauliString PauliString::from_key(int n, std::uint64_t key) {
  check_qubits(n);
  const auto z = static_cast<std::uint32_t>(key & low_mask(n));
  const auto x = static_cast<std::uint32_t>(key >> n);
  return PauliString(n, x, z);
}

char PauliString::at(int q) const {
  const int xb = (x_ >> q) & 1;
  const int zb = (z_ >> q) & 1;
  return "IZXY"[(xb << 1) | zb];
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

std::uint64_t PauliString::observable_index() const {
  if (is_identity()) throw InvariantError("identity is not an observable");
  return key() - 1;
}

std::string PauliString::str() const {
  std::string s(n_, 'I');
  for (int q = 0; q < n_; ++q) s[q] = at(q);
  return s;
}

std::ostream& operator<<(std::ostream& os, const PauliString& p) {
  return os << p.str();
}

std::pair<Phase, PauliString> multiply(const PauliString& p, const PauliString& q) {
  check_same_n(p, q);
  const std::uint32_t x = p.x_mask() ^ q.x_mask();
  const std::uint32_t z = p.z_mask() ^ q.z_mask();
  // i^{x1 z1} X^x1 Z^z1 * i^{x2 z2} X^x2 Z^z2
  //   = i^{x1 z1 + x2 z2 + 2 z1 x2 - x z} * (i^{x z} X^x Z^z)
  const int e = std::popcount(p.x_mask() & p.z_mask()) +
                std::popcount(q.x_mask() & q.z_mask()) +
                2 * std::popcount(p.z_mask() & q.x_mask()) -
                std::popcount(x & z);
  return {Phase{static_cast<std::uint8_t>(e & 3)},
          PauliString(p.num_qubits(), x, z)};
}

bool commutes(const PauliString& p, const PauliString& q) {
  check_same_n(p, q);
  const int form = std::popcount(p.x_mask() & q.z_mask()) +
                   std::popcount(p.z_mask() & q.x_mask());
  return (form & 1) == 0;
}

std::uint64_t observable_count(int n) {
  check_qubits(n);
  return (std::uint64_t{1} << (2 * n)) - 1;
}

std::uint64_t compatible_count(int n) {
  check_qubits(n);
  return 2 * ((std::uint64_t{1} << (2 * (n - 1))) - 1);
}

void require_observable(const PauliString& p, int n) {
  if (p.num_qubits() != n) {
    throw DimensionError(p.str() + " is not a " + std::to_string(n) +
                         "-qubit string");
  }
  if (p.is_identity()) throw InvariantError("identity is not an observable");
}

}  // namespace contextium
