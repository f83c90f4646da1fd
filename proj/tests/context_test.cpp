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


#include "contextium/context.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <set>

#include "contextium/errors.hpp"
#include "contextium/qsim.hpp"

using namespace contextium;

namespace {

PauliString P(const char* s) { return PauliString::parse(s); }

std::optional<Context> try_make(const PauliString& a, const PauliString& b,
                                const PauliString& c) {
  try {
    return Context::make(a, b, c);
  } catch (const InvariantError&) {
    return std::nullopt;
  }
}

}  // namespace

TEST(context, make_sorts_and_signs) {
  const auto c = Context::make(P("ZZ"), P("XX"), P("YY"));
  EXPECT_EQ(c[0], P("ZZ"));
  EXPECT_EQ(c[1], P("XX"));
  EXPECT_EQ(c[2], P("YY"));
  EXPECT_EQ(c.sign(), -1);
  EXPECT_TRUE(c.negative());
  EXPECT_EQ(Context::make(P("XZ"), P("ZX"), P("YY")).sign(), 1);
  EXPECT_EQ(Context::make(P("XI"), P("IX"), P("XX")).sign(), 1);
  EXPECT_TRUE(c.contains(P("YY")));
  EXPECT_FALSE(c.contains(P("XY")));
  EXPECT_EQ(Context::from_pair(P("XX"), P("YY")), c);
}

TEST(context, make_rejects_invalid_trios) {
  EXPECT_THROW((void)Context::make(P("XI"), P("XI"), P("II")), InvariantError);
  EXPECT_THROW((void)Context::make(P("XI"), P("ZI"), P("YI")), InvariantError);
  EXPECT_THROW((void)Context::make(P("XI"), P("IX"), P("XZ")), InvariantError);
  EXPECT_THROW((void)Context::make(P("XI"), P("IX"), P("XXI")), DimensionError);
  EXPECT_THROW((void)Context::from_pair(P("XI"), P("ZI")), InvariantError);
}

TEST(context, two_qubit_trios_by_brute_force) {
  std::vector<PauliString> obs;
  for (std::uint64_t k = 1; k < 16; ++k) obs.push_back(PauliString::from_key(2, k));
  std::set<Context> found;
  int negatives = 0;
  int trios = 0;
  for (std::size_t i = 0; i < obs.size(); ++i)
    for (std::size_t j = i + 1; j < obs.size(); ++j)
      for (std::size_t k = j + 1; k < obs.size(); ++k) {
        ++trios;
        if (auto c = try_make(obs[i], obs[j], obs[k])) {
          found.insert(*c);
          negatives += c->negative();
        }
      }
  EXPECT_EQ(trios, 455);
  EXPECT_EQ(found.size(), 15u);
  EXPECT_EQ(negatives, 3);
  const auto listed = enumerate_contexts(2);
  EXPECT_EQ(std::set<Context>(listed.begin(), listed.end()), found);
}

TEST(context, enumeration_counts) {
  const std::uint64_t totals[] = {15, 315, 5355, 86955};
  const std::uint64_t negatives[] = {3, 90, 1908, 35400};
  for (int n = 2; n <= 5; ++n) {
    const auto counts = count_by_enumeration(n);
    EXPECT_EQ(counts.total, totals[n - 2]) << n;
    EXPECT_EQ(counts.negative, negatives[n - 2]) << n;
    EXPECT_EQ(count_contexts_closed_form(n), totals[n - 2]) << n;
    EXPECT_EQ(count_negative_closed_form(n), negatives[n - 2]) << n;
  }
}

TEST(context, closed_forms_to_sixteen_qubits) {
  for (int n = 2; n <= 16; ++n) {
    const auto total = count_contexts_closed_form(n);
    const auto neg = count_negative_closed_form(n);
    EXPECT_LT(2 * neg, total) << n;
    // Each observable lies in (4^{n-1} - 1) contexts.
    const std::uint64_t per_obs = (std::uint64_t{1} << (2 * (n - 1))) - 1;
    EXPECT_EQ(total * 3, observable_count(n) * per_obs) << n;
  }
  EXPECT_EQ(count_contexts_closed_form(16), 1537228671019559595ull);
  EXPECT_THROW((void)count_contexts_closed_form(17), CapabilityError);
  EXPECT_THROW((void)count_contexts_closed_form(1), CapabilityError);
}

TEST(context, enumeration_is_sorted_and_unique) {
  const auto all = enumerate_contexts(3);
  ASSERT_EQ(all.size(), 315u);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1], all[i]);
  std::map<PauliString, int> incidence;
  for (const auto& c : all)
    for (const auto& m : c.members()) ++incidence[m];
  EXPECT_EQ(incidence.size(), 63u);
  for (const auto& [p, k] : incidence) EXPECT_EQ(k, 15) << p;
}

TEST(context, signs_match_dense_products) {
  for (int n = 2; n <= 3; ++n) {
    const int dim = 1 << n;
    for (const auto& c : enumerate_contexts(n)) {
      const Eigen::MatrixXcd prod =
          pauli_matrix(c[0]) * pauli_matrix(c[1]) * pauli_matrix(c[2]);
      EXPECT_TRUE(prod.isApprox(c.sign() * Eigen::MatrixXcd::Identity(dim, dim), 1e-12))
          << c;
    }
  }
}

TEST(context, column_profile_predicts_sign) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& c : enumerate_contexts(n)) {
      const auto prof = column_profile(c);
      EXPECT_EQ(prof.other, 0);
      EXPECT_EQ(prof.clockwise + prof.counter_clockwise + prof.all_identity +
                    prof.single_pauli + prof.pair_with_identity,
                n);
      EXPECT_EQ((prof.clockwise + prof.counter_clockwise) % 2, 0) << c;
      EXPECT_EQ(prof.predicted_sign(), c.sign()) << c;
    }
  }
}

TEST(context, capability_limits) {
  EXPECT_THROW((void)enumerate_contexts(1), CapabilityError);
  EXPECT_THROW((void)enumerate_contexts(7), CapabilityError);
}
