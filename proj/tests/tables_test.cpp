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


#include "contextium/tables.hpp"

#include <gtest/gtest.h>

#include <map>

#include "contextium/errors.hpp"
#include "contextium/inequality.hpp"
#include "contextium/solver.hpp"

using namespace contextium;

namespace {

PauliString P(const char* s) { return PauliString::parse(s); }

KSTable::Grid grid(std::initializer_list<const char*> cells) {
  KSTable::Grid g;
  auto it = cells.begin();
  for (auto& row : g)
    for (auto& cell : row) cell = P(*it++);
  return g;
}

bool line_holds(const Context& c, const Assignment& a) {
  return a.at(c[0]) * a.at(c[1]) * a.at(c[2]) == c.sign();
}

}  // namespace

TEST(ks_table, peres_mermin_structure) {
  const auto t = peres_mermin_table();
  EXPECT_EQ(t.num_qubits(), 2);
  EXPECT_EQ(t.negative_lines(), 3);
  for (const auto& r : t.rows()) EXPECT_EQ(r.sign(), 1);
  for (const auto& c : t.cols()) EXPECT_EQ(c.sign(), -1);
  EXPECT_TRUE(t.admits_no_model());
}

TEST(ks_table, table2_has_one_negative_line) {
  const auto t = table2();
  EXPECT_EQ(t.negative_lines(), 1);
  EXPECT_EQ(t.rows()[0].sign(), 1);
  EXPECT_EQ(t.cols()[0].sign(), -1);
}

TEST(ks_table, parity_witness) {
  for (const auto& t : {peres_mermin_table(), table2()}) {
    const auto w = table_parity_witness(t);
    EXPECT_EQ(w.sign_product, -1);
    EXPECT_TRUE(w.no_model);
    EXPECT_EQ(w.max_satisfiable, 5);
    ASSERT_GE(w.unsatisfied_line, 0);
    const auto lines = t.lines();
    for (int i = 0; i < 6; ++i) {
      EXPECT_EQ(line_holds(lines[i], w.model), i != w.unsatisfied_line) << i;
    }
  }
}

TEST(ks_table, even_negative_table_is_not_a_witness) {
  const auto t = KSTable::from_grid(grid({"XIII", "IXII", "XXII",
                                          "IIXI", "IIIX", "IIXX",
                                          "XIXI", "IXIX", "XXXX"}));
  EXPECT_EQ(t.negative_lines(), 0);
  EXPECT_FALSE(t.admits_no_model());
  const auto w = table_parity_witness(t);
  EXPECT_FALSE(w.no_model);
  EXPECT_EQ(w.max_satisfiable, 6);
  EXPECT_EQ(w.unsatisfied_line, -1);
  for (const auto& line : t.lines()) EXPECT_TRUE(line_holds(line, w.model));
}

TEST(ks_table, malformed_grids) {
  EXPECT_THROW((void)KSTable::from_grid(grid({"XX", "YZ", "ZY", "YY", "ZX", "XZ",
                                              "ZZ", "XY", "XX"})),
               InvariantError);
  EXPECT_THROW((void)KSTable::from_grid(grid({"XX", "YZ", "ZY", "YY", "ZX", "XZ",
                                              "ZZ", "YX", "XY"})),
               InvariantError);
  EXPECT_FALSE(KSTable::try_from_grid(grid({"XI", "IX", "XX", "ZI", "IZ", "ZZ",
                                           "YI", "IY", "YY"}))
                   .has_value());
}

TEST(ks_table, canonical_form_is_symmetry_invariant) {
  const auto pm = peres_mermin_table();
  auto g = pm.grid();
  std::swap(g[0], g[2]);
  KSTable::Grid transposed;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) transposed[r][c] = g[c][r];
  EXPECT_EQ(KSTable::from_grid(g).canonical(), pm.canonical());
  EXPECT_EQ(KSTable::from_grid(transposed).canonical(), pm.canonical());
}

TEST(ks_table, ten_two_qubit_tables) {
  const auto tables = enumerate_tables(2);
  ASSERT_EQ(tables.size(), 10u);
  std::map<Context, int> appearances;
  int with_three = 0;
  for (const auto& t : tables) {
    EXPECT_EQ(t, t.canonical());
    EXPECT_EQ(t.negative_lines() % 2, 1);
    with_three += t.negative_lines() == 3;
    for (const auto& line : t.lines()) ++appearances[line];
    const auto r = solve_exact(Inequality(2, t.lines(), 0, "table"));
    EXPECT_EQ(r.s, 5);
    EXPECT_EQ(table_parity_witness(t).max_satisfiable, 5);
  }
  EXPECT_EQ(with_three, 1);
  ASSERT_EQ(appearances.size(), 15u);
  for (const auto& [c, k] : appearances) EXPECT_EQ(k, 4) << c;
  EXPECT_NE(std::find(tables.begin(), tables.end(), peres_mermin_table().canonical()),
            tables.end());
  EXPECT_NE(std::find(tables.begin(), tables.end(), table2().canonical()), tables.end());
  EXPECT_THROW((void)enumerate_tables(3), CapabilityError);
}
