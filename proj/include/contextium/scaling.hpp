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

#include <cstdint>
#include <string_view>
#include <vector>

#include "contextium/rational.hpp"

namespace contextium {

enum class CountSource { closed_form, enumeration };
std::string_view to_string(CountSource s);

/// Per-n summary of the full inequality.
struct ScalingRow {
  int n = 0;
  std::uint64_t total = 0;     // N(n)
  std::uint64_t negative = 0;  // N(n) - S(n)
  std::uint64_t positive = 0;  // S(n)
  std::int64_t bound = 0;      // 2S - N = N - 2 * negative
  Rational epsilon;            // 2 * negative / N
  Rational degree;             // N / bound
  CountSource source = CountSource::closed_form;
};

inline constexpr int kDefaultVerifyMax = 5;

/// Rows for n = 2..n_max (n_max <= 16) from the closed forms. Rows with
/// n <= verify_max (capped at 6) are re-counted by enumeration and marked
/// as such; a disagreement throws InvariantError.
std::vector<ScalingRow> report_scaling(int n_max, int verify_max = kDefaultVerifyMax);

ScalingRow scaling_row(int n);

struct LimitCheck {
  std::vector<ScalingRow> rows;
  bool epsilon_increasing = false;
  /// negative / N < 1/2 on every row and increasing with n.
  bool negative_fraction_below_half = false;
  bool negative_fraction_increasing = false;
  /// D(n+1) > D(n) on every consecutive pair.
  bool degree_increasing = false;

  bool ok() const {
    return epsilon_increasing && negative_fraction_below_half &&
           negative_fraction_increasing && degree_increasing;
  }
};

/// Closed-form monotonicity check on 2..n_max (4 <= n_max <= 16).
LimitCheck epsilon_limit_check(int n_max);

}  // namespace contextium
