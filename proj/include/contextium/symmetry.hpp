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
#include <cstddef>
#include <string>
#include <vector>

#include "contextium/context.hpp"

namespace contextium {

/// Qubit permutation composed with a relabeling of {X, Y, Z} on each qubit.
struct PauliSymmetry {
  /// Qubit q of the image takes qubit qubit_perm[q] of the source.
  std::vector<int> qubit_perm;
  /// Per image qubit: images of X, Y, Z as indices 0, 1, 2.
  std::vector<std::array<int, 3>> relabel;

  PauliString apply(const PauliString& p) const;
  Context apply(const Context& c) const;
  /// All per-qubit relabelings are even permutations, or all are odd.
  bool uniform_parity() const;
};

/// Identity qubit order with the same relabeling on every qubit.
PauliSymmetry global_relabeling(int n, std::array<int, 3> images);

/// Qubit permutations x per-qubit relabelings of a common parity:
/// n! * 2 * 3^n elements. This is the largest such group that preserves
/// context signs (an odd relabeling on a single qubit flips them).
std::vector<PauliSymmetry> sign_preserving_symmetries(int n);

struct SymmetryClass {
  std::string label;  // "I" .. "VII"
  std::size_t orbit_size = 0;
  Context representative;
  bool negative = false;
  std::vector<Context> members;  // sorted
};

/// Orbits of the n = 3 contexts under sign_preserving_symmetries(3), labelled
/// I..VII and ordered as
///   I {XII, IXI, XXI}, II {XII, IXX, XXX}, III {XXI, YZI, ZYI},
///   IV {XXI, XIX, IXX}, V {XXI, YZX, ZYX}, VI {XXI, YYI, ZZI},
///   VII {XXI, YYX, ZZX}.
/// Throws CapabilityError for n != 3, InvariantError if the orbit structure
/// does not match these seven classes.
std::vector<SymmetryClass> classify_contexts(int n = 3);

}  // namespace contextium
