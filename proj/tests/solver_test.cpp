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


#include "contextium/solver.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "contextium/context.hpp"
#include "contextium/errors.hpp"
#include "contextium/inequality.hpp"

using namespace contextium;

namespace {

PauliString P(const char* s) { return PauliString::parse(s); }

// Straight enumeration over every +-1 model, independent of the solvers.
std::int64_t oracle_max_satisfied(const std::vector<Context>& contexts) {
  std::map<PauliString, int> index;
  for (const auto& c : contexts)
    for (const auto& m : c.members()) index.emplace(m, 0);
  int v = 0;
  for (auto& [p, i] : index) i = v++;
  std::int64_t best = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << v); ++bits) {
    std::int64_t sat = 0;
    for (const auto& c : contexts) {
      int prod = 1;
      for (const auto& m : c.members()) prod *= (bits >> index[m] & 1) ? -1 : 1;
      sat += prod == c.sign();
    }
    best = std::max(best, sat);
  }
  return best;
}

std::vector<Context> random_subset(const std::vector<Context>& all, std::size_t k,
                                   std::mt19937_64& rng) {
  std::vector<Context> pick = all;
  std::shuffle(pick.begin(), pick.end(), rng);
  pick.erase(pick.begin() + static_cast<std::ptrdiff_t>(k), pick.end());
  std::sort(pick.begin(), pick.end());
  return pick;
}

}  // namespace

TEST(assignment, set_get_and_errors) {
  Assignment a;
  a.set(P("XX"), -1);
  EXPECT_EQ(a.at(P("XX")), -1);
  EXPECT_FALSE(a.get(P("YY")).has_value());
  EXPECT_THROW(a.set(P("XX"), 0), std::invalid_argument);
  EXPECT_THROW((void)a.at(P("YY")), IncompleteAssignmentError);
  const auto pm = peres_mermin_inequality();
  EXPECT_THROW((void)satisfied_count(pm, a), IncompleteAssignmentError);
}

TEST(assignment, chi_identity) {
  const auto ineq = full_inequality(2);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Assignment a;
    for (const auto& p : ineq.observables()) a.set(p, rng() & 1 ? 1 : -1);
    EXPECT_EQ(chi(ineq, a), 2 * satisfied_count(ineq, a) - 15);
  }
  const auto plus = Assignment::constant(ineq.observables(), 1);
  EXPECT_EQ(satisfied_count(ineq, plus), 12);
}

TEST(solver, full_two_qubit_matches_oracle) {
  const auto ineq = full_inequality(2);
  const auto r = solve_bruteforce(ineq);
  EXPECT_EQ(oracle_max_satisfied(enumerate_contexts(2)), 12);
  EXPECT_EQ(r.s, 12);
  EXPECT_EQ(r.bound(), 9);
  EXPECT_TRUE(r.optimal);
  EXPECT_EQ(r.effort, 1u << 15);
  EXPECT_EQ(satisfied_count(ineq, r.witness), r.s);
  EXPECT_EQ(ineq.bound(), 9);
}

TEST(solver, peres_mermin_bound) {
  const auto ineq = peres_mermin_inequality();
  EXPECT_EQ(ineq.size(), 6u);
  EXPECT_EQ(ineq.bound(), 4);
  const auto r = solve_exact(ineq);
  EXPECT_EQ(r.s, 5);
  EXPECT_EQ(r.bound(), 4);
  EXPECT_EQ(solve_branch_and_bound(ineq).s, 5);
  EXPECT_EQ(table2_inequality().bound(), 4);
  EXPECT_EQ(solve_exact(table2_inequality()).s, 5);
}

TEST(solver, two_qubit_15_bound) {
  const auto ineq = two_qubit_15_inequality();
  EXPECT_EQ(ineq.size(), 15u);
  EXPECT_EQ(ineq.bound(), 9);
  EXPECT_EQ(solve_exact(ineq).bound(), 9);
}

TEST(solver, branch_and_bound_agrees_with_oracle) {
  std::mt19937_64 rng(2026);
  const auto two = enumerate_contexts(2);
  const auto three = enumerate_contexts(3);
  for (int trial = 0; trial < 40; ++trial) {
    const bool small = trial % 2 == 0;
    const auto pick = small ? random_subset(two, 1 + rng() % 15, rng)
                            : random_subset(three, 1 + rng() % 6, rng);
    const int n = small ? 2 : 3;
    const Inequality ineq(n, pick, 0);
    const auto expected = oracle_max_satisfied(pick);
    const auto bf = solve_bruteforce(ineq);
    const auto bb = solve_branch_and_bound(ineq);
    EXPECT_EQ(bf.s, expected);
    EXPECT_EQ(bb.s, expected);
    EXPECT_EQ(satisfied_count(ineq, bb.witness), bb.s);
    EXPECT_EQ(to_string(bb.method), "branch-and-bound");
  }
}

TEST(solver, bruteforce_cap_and_budget) {
  const auto full3 = full_inequality(3);
  EXPECT_THROW((void)solve_bruteforce(full3), CapabilityError);
  EXPECT_THROW((void)solve_branch_and_bound(full3, 1000), CapabilityError);
}

TEST(solver, local_search_is_deterministic_and_sound) {
  const auto ineq = full_inequality(2);
  const auto a = solve_local_search(ineq, {20, 0, 0.3, 11});
  const auto b = solve_local_search(ineq, {20, 0, 0.3, 11});
  EXPECT_EQ(a.s, 12);
  EXPECT_FALSE(a.optimal);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.best_restart, b.best_restart);
  EXPECT_EQ(satisfied_count(ineq, a.witness), a.s);
  ASSERT_TRUE(a.local_search.has_value());
  EXPECT_EQ(a.local_search->max_flips, 300);
  EXPECT_EQ(to_string(a.method), "local-search");
}

TEST(solver, local_search_never_below_all_plus_start) {
  const auto ineq = full_inequality(3);
  const auto r = solve_local_search(ineq, {1, 0, 0.3, 5});
  EXPECT_GE(r.s, 225);
  EXPECT_EQ(satisfied_count(ineq, r.witness), r.s);
}

// A model found by an independent search: 29 observables set to -1 leave
// 63 of the 315 predictions unsatisfied.
TEST(solver, explicit_three_qubit_model_exceeds_counting_bound) {
  const char* minus[] = {"IIY", "IIZ", "IXI", "IYI", "IYX", "IZZ", "XIY", "XIZ",
                         "XXI", "XXX", "XYI", "XYX", "XYZ", "XZY", "XZZ", "YIZ",
                         "YXY", "YYI", "YYX", "YZZ", "ZIX", "ZIY", "ZIZ", "ZXI",
                         "ZYI", "ZYX", "ZZI", "ZZX", "ZZZ"};
  const auto ineq = full_inequality(3);
  auto a = Assignment::constant(ineq.observables(), 1);
  for (const char* m : minus) a.set(P(m), -1);
  EXPECT_EQ(satisfied_count(ineq, a), 252);
  EXPECT_THROW((void)noncontextual_bound(ineq), BoundFalsifiedError);
}

TEST(solver, noncontextual_bound_reports) {
  const auto full2 = noncontextual_bound(full_inequality(2));
  EXPECT_EQ(full2.bound, 9);
  EXPECT_TRUE(full2.optimal);
  const auto pm = noncontextual_bound(peres_mermin_inequality());
  EXPECT_EQ(pm.bound, 4);
  EXPECT_EQ(pm.s, 5);
}

TEST(solver, deleting_any_term_lowers_tolerated_error) {
  const auto all = enumerate_contexts(2);
  const auto full = full_inequality(2);
  for (std::size_t drop = 0; drop < all.size(); ++drop) {
    auto rest = all;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
    const auto reduced = with_exact_bound(2, rest);
    EXPECT_LT(reduced.tolerated_error(), full.tolerated_error()) << all[drop];
  }
}

TEST(solver, adding_a_term_raises_s_by_at_most_one) {
  std::mt19937_64 rng(99);
  const auto all = enumerate_contexts(2);
  for (int trial = 0; trial < 30; ++trial) {
    auto pick = random_subset(all, 2 + rng() % 13, rng);
    const Context extra = pick.back();
    pick.pop_back();
    const auto before = solve_exact(Inequality(2, pick, 0)).s;
    pick.push_back(extra);
    const auto after = solve_exact(Inequality(2, pick, 0)).s;
    EXPECT_GE(after, before);
    EXPECT_LE(after, before + 1);
  }
}

TEST(solver, exact_bounds_are_valid_for_every_model) {
  const auto pm = peres_mermin_inequality();
  const auto obs = pm.observables();
  for (std::uint32_t bits = 0; bits < (1u << obs.size()); ++bits) {
    Assignment a;
    for (std::size_t i = 0; i < obs.size(); ++i) a.set(obs[i], (bits >> i & 1) ? -1 : 1);
    EXPECT_LE(chi(pm, a), pm.bound());
  }
}
