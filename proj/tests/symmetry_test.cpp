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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "contextium/errors.hpp"

using namespace contextium;

namespace {

PauliString P(const char* s) { return PauliString::parse(s); }

}  // namespace

TEST(symmetry, group_size_and_sign_preservation) {
  const auto group = sign_preserving_symmetries(3);
  EXPECT_EQ(group.size(), 324u);
  const auto contexts = enumerate_contexts(3);
  const std::set<Context> all(contexts.begin(), contexts.end());
  for (const auto& g : group) {
    EXPECT_TRUE(g.uniform_parity());
    for (const auto& c : contexts) {
      const auto image = g.apply(c);
      EXPECT_EQ(image.sign(), c.sign());
      EXPECT_TRUE(all.count(image));
    }
  }
}

TEST(symmetry, odd_relabeling_on_one_qubit_flips_signs) {
  PauliSymmetry g{{0, 1}, {{{1, 0, 2}}, {{0, 1, 2}}}};
  EXPECT_FALSE(g.uniform_parity());
  EXPECT_EQ(g.apply(P("XZ")), P("YZ"));
  const auto c = Context::make(P("XX"), P("YY"), P("ZZ"));
  EXPECT_EQ(c.sign(), -1);
  EXPECT_EQ(g.apply(c).sign(), 1);
}

TEST(symmetry, global_relabeling_alone_gives_small_orbits) {
  // Qubit permutations with one relabeling shared by every qubit: orbits stay
  // far below the size-81 classes.
  std::vector<PauliSymmetry> group;
  std::array<int, 3> images{0, 1, 2};
  do {
    std::vector<int> perm{0, 1, 2};
    do {
      auto g = global_relabeling(3, images);
      g.qubit_perm = perm;
      group.push_back(g);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::next_permutation(images.begin(), images.end()));
  ASSERT_EQ(group.size(), 36u);
  std::set<Context> seen;
  std::size_t largest = 0;
  for (const auto& c : enumerate_contexts(3)) {
    if (seen.count(c)) continue;
    std::set<Context> orbit;
    for (const auto& g : group) orbit.insert(g.apply(c));
    largest = std::max(largest, orbit.size());
    seen.insert(orbit.begin(), orbit.end());
  }
  EXPECT_EQ(seen.size(), 315u);
  EXPECT_LE(largest, 36u);
}

TEST(symmetry, seven_classes_at_three_qubits) {
  const auto classes = classify_contexts(3);
  ASSERT_EQ(classes.size(), 7u);
  const char* labels[] = {"I", "II", "III", "IV", "V", "VI", "VII"};
  const std::size_t sizes[] = {27, 81, 9, 27, 81, 9, 81};
  const bool negative[] = {false, false, false, false, false, true, true};
  std::set<Context> covered;
  std::size_t negatives = 0;
  for (std::size_t i = 0; i < 7; ++i) {
    const auto& k = classes[i];
    EXPECT_EQ(k.label, labels[i]);
    EXPECT_EQ(k.orbit_size, sizes[i]) << k.label;
    EXPECT_EQ(k.negative, negative[i]) << k.label;
    EXPECT_EQ(k.members.size(), k.orbit_size);
    EXPECT_TRUE(std::binary_search(k.members.begin(), k.members.end(), k.representative));
    for (const auto& c : k.members) {
      EXPECT_EQ(c.negative(), k.negative);
      EXPECT_TRUE(covered.insert(c).second);
    }
    if (k.negative) negatives += k.orbit_size;
  }
  EXPECT_EQ(covered.size(), 315u);
  EXPECT_EQ(negatives, 90u);
  EXPECT_EQ(classes[2].representative, Context::make(P("XXI"), P("YZI"), P("ZYI")));
  EXPECT_THROW((void)classify_contexts(2), CapabilityError);
}
