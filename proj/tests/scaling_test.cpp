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


#include "contextium/scaling.hpp"

#include <gtest/gtest.h>

#include "contextium/errors.hpp"
#include "contextium/rational.hpp"

using namespace contextium;

TEST(rational, reduces_and_prints) {
  EXPECT_EQ(Rational(6, 15), Rational(2, 5));
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(8, 4).str(), "2");
  EXPECT_EQ(Rational(424, 595).str(), "424/595");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_LT(Rational(4, 7), Rational(424, 595));
  EXPECT_GT(Rational(1, 3), Rational(333333, 1000000));
}

TEST(rational, decimal_rendering) {
  EXPECT_EQ(Rational(424, 595).decimal(), "0.712605");
  EXPECT_EQ(Rational(5, 3).decimal(), "1.66667");
  EXPECT_EQ(Rational(2, 5).decimal(), "0.400000");
  EXPECT_EQ(Rational(4720, 5797).decimal(), "0.814214");
  EXPECT_EQ(Rational(7, 3).decimal(3), "2.33");
}

TEST(scaling, exact_rows_to_five_qubits) {
  const auto rows = report_scaling(5, 5);
  ASSERT_EQ(rows.size(), 4u);
  const Rational eps[] = {{2, 5}, {4, 7}, {424, 595}, {4720, 5797}};
  const std::int64_t bounds[] = {9, 135, 1539, 16155};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].n, static_cast<int>(i) + 2);
    EXPECT_EQ(rows[i].epsilon, eps[i]);
    EXPECT_EQ(rows[i].bound, bounds[i]);
    EXPECT_EQ(rows[i].degree, Rational(static_cast<std::int64_t>(rows[i].total), bounds[i]));
    EXPECT_EQ(rows[i].source, CountSource::enumeration);
  }
  EXPECT_EQ(to_string(CountSource::closed_form), "closed-form");
}

TEST(scaling, growth_to_sixteen_qubits) {
  const auto check = epsilon_limit_check(16);
  EXPECT_TRUE(check.ok());
  ASSERT_EQ(check.rows.size(), 15u);
  for (std::size_t i = 1; i < check.rows.size(); ++i) {
    EXPECT_LT(check.rows[i - 1].epsilon, check.rows[i].epsilon);
    EXPECT_LT(check.rows[i - 1].degree, check.rows[i].degree);
  }
  EXPECT_LT(check.rows.back().epsilon, Rational(1));
  EXPECT_GT(check.rows.back().epsilon.to_double(), 0.998);
}

TEST(scaling, argument_errors) {
  EXPECT_THROW((void)report_scaling(1), CapabilityError);
  EXPECT_THROW((void)report_scaling(17), CapabilityError);
  EXPECT_THROW((void)epsilon_limit_check(3), CapabilityError);
}
