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

#include "contextium/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "contextium/errors.hpp"

namespace contextium {

namespace {

int permutation_parity(const std::array<int, 3>& p) {
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) inv += p[i] > p[j];
  return inv & 1;
}

// (x, z) bits for X, Y, Z in index order 0, 1, 2.
constexpr std::array<std::array<int, 2>, 3> kBits{{{1, 0}, {1, 1}, {0, 1}}};

int pauli_index(char c) { return c == 'X' ? 0 : c == 'Y' ? 1 : 2; }

}  // namespace

PauliString PauliSymmetry::apply(const PauliString& p) const {
  const int n = p.num_qubits();
  if (static_cast<int>(qubit_perm.size()) != n || static_cast<int>(relabel.size()) != n) {
    throw DimensionError("symmetry and Pauli string differ in qubit count");
  }
  std::uint32_t x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    const char src = p.at(qubit_perm[q]);
    if (src == 'I') continue;
    const auto bits = kBits[relabel[q][pauli_index(src)]];
    x |= static_cast<std::uint32_t>(bits[0]) << q;
    z |= static_cast<std::uint32_t>(bits[1]) << q;
  }
  return PauliString(n, x, z);
}

Context PauliSymmetry::apply(const Context& c) const {
  return Context::make(apply(c[0]), apply(c[1]), apply(c[2]));
}

bool PauliSymmetry::uniform_parity() const {
  std::set<int> parities;
  for (const auto& r : relabel) parities.insert(permutation_parity(r));
  return parities.size() <= 1;
}

PauliSymmetry global_relabeling(int n, std::array<int, 3> images) {
  PauliSymmetry s;
  s.qubit_perm.resize(n);
  std::iota(s.qubit_perm.begin(), s.qubit_perm.end(), 0);
  s.relabel.assign(n, images);
  return s;
}

std::vector<PauliSymmetry> sign_preserving_symmetries(int n) {
  if (n < 1 || n > 6) throw CapabilityError("symmetry group enumeration supports 1 <= n <= 6");
  std::array<std::vector<std::array<int, 3>>, 2> by_parity;
  std::array<int, 3> p{0, 1, 2};
  do {
    by_parity[permutation_parity(p)].push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<PauliSymmetry> out;
  std::vector<int> qp(n);
  std::iota(qp.begin(), qp.end(), 0);
  do {
    for (const auto& family : by_parity) {
      // Mixed-radix counter over one relabeling per qubit.
      std::vector<std::size_t> digit(n, 0);
      while (true) {
        PauliSymmetry s;
        s.qubit_perm = qp;
        for (int q = 0; q < n; ++q) s.relabel.push_back(family[digit[q]]);
        out.push_back(std::move(s));
        int q = 0;
        while (q < n && ++digit[q] == family.size()) digit[q++] = 0;
        if (q == n) break;
      }
    }
  } while (std::next_permutation(qp.begin(), qp.end()));
  return out;
}

std::vector<SymmetryClass> classify_contexts(int n) {
  if (n != 3) {
    throw CapabilityError("symmetry classification is only implemented for n = 3, got n = " +
                          std::to_string(n));
  }
  const std::vector<Context> contexts = enumerate_contexts(3);
  const auto group = sign_preserving_symmetries(3);

  std::map<Context, std::size_t> orbit_of;
  std::vector<std::vector<Context>> orbits;
  for (const auto& c : contexts) {
    if (orbit_of.count(c)) continue;
    std::set<Context> orbit;
    for (const auto& g : group) orbit.insert(g.apply(c));
    for (const auto& m : orbit) orbit_of.emplace(m, orbits.size());
    orbits.emplace_back(orbit.begin(), orbit.end());
  }

  static const std::array<std::array<const char*, 4>, 7> kReference{{
      {"I", "XII", "IXI", "XXI"},
      {"II", "XII", "IXX", "XXX"},
      {"III", "XXI", "YZI", "ZYI"},
      {"IV", "XXI", "XIX", "IXX"},
      {"V", "XXI", "YZX", "ZYX"},
      {"VI", "XXI", "YYI", "ZZI"},
      {"VII", "XXI", "YYX", "ZZX"},
  }};
  if (orbits.size() != kReference.size()) {
    throw InvariantError("expected 7 orbits, found " + std::to_string(orbits.size()));
  }

  std::vector<SymmetryClass> out;
  std::set<std::size_t> used;
  for (const auto& ref : kReference) {
    const Context rep = Context::make(PauliString::parse(ref[1]), PauliString::parse(ref[2]),
                                      PauliString::parse(ref[3]));
    const std::size_t idx = orbit_of.at(rep);
    if (!used.insert(idx).second) {
      throw InvariantError(std::string("class ") + ref[0] + " shares an orbit with another class");
    }
    const auto& orbit = orbits[idx];
    for (const auto& m : orbit) {
      if (m.sign() != rep.sign()) throw InvariantError("orbit mixes context signs");
    }
    out.push_back(SymmetryClass{ref[0], orbit.size(), rep, rep.negative(), orbit});
  }
  return out;
}

}  // namespace contextium
