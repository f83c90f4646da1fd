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

#include <algorithm>
#include <string>

#include "contextium/context.hpp"
#include "contextium/errors.hpp"
#include "contextium/pauli.hpp"

namespace contextium {

std::string_view to_string(CountSource s) {
  return s == CountSource::enumeration ? "enumeration" : "closed-form";
}

ScalingRow scaling_row(int n) {
  ScalingRow row;
  row.n = n;
  row.total = count_contexts_closed_form(n);
  row.negative = count_negative_closed_form(n);
  row.positive = row.total - row.negative;
  row.bound = static_cast<std::int64_t>(row.total) - 2 * static_cast<std::int64_t>(row.negative);
  if (row.bound != 2 * static_cast<std::int64_t>(row.positive) - static_cast<std::int64_t>(row.total)) {
    throw InvariantError("b = N - 2 * negatives does not hold");
  }
  const auto total = static_cast<std::int64_t>(row.total);
  row.epsilon = Rational(2 * static_cast<std::int64_t>(row.negative), total);
  row.degree = Rational(total, row.bound);
  if (!(row.epsilon > Rational(0) && row.epsilon < Rational(1))) {
    throw InvariantError("tolerated error outside (0, 1) at n = " + std::to_string(n));
  }
  return row;
}

std::vector<ScalingRow> report_scaling(int n_max, int verify_max) {
  if (n_max < 2 || n_max > kMaxQubits) {
    throw CapabilityError("report range needs 2 <= n_max <= " + std::to_string(kMaxQubits));
  }
  verify_max = std::min(verify_max, kMaxEnumerationQubits);
  std::vector<ScalingRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    ScalingRow row = scaling_row(n);
    if (n <= verify_max) {
      const ContextCounts counted = count_by_enumeration(n);
      if (counted.total != row.total || counted.negative != row.negative) {
        throw InvariantError("enumeration disagrees with closed forms at n = " +
                             std::to_string(n));
      }
      row.source = CountSource::enumeration;
    }
    rows.push_back(row);
  }
  return rows;
}

LimitCheck epsilon_limit_check(int n_max) {
  if (n_max < 4) throw CapabilityError("limit check needs n_max >= 4");
  LimitCheck check;
  check.rows = report_scaling(n_max, 0);
  check.epsilon_increasing = true;
  check.negative_fraction_below_half = true;
  check.negative_fraction_increasing = true;
  check.degree_increasing = true;
  const Rational half(1, 2);
  for (std::size_t i = 0; i < check.rows.size(); ++i) {
    const auto& r = check.rows[i];
    const Rational frac(static_cast<std::int64_t>(r.negative), static_cast<std::int64_t>(r.total));
    if (!(frac < half)) check.negative_fraction_below_half = false;
    if (i == 0) continue;
    const auto& prev = check.rows[i - 1];
    const Rational prev_frac(static_cast<std::int64_t>(prev.negative),
                             static_cast<std::int64_t>(prev.total));
    if (!(r.epsilon > prev.epsilon)) check.epsilon_increasing = false;
    if (!(frac > prev_frac)) check.negative_fraction_increasing = false;
    if (!(r.degree > prev.degree)) check.degree_increasing = false;
  }
  return check;
}

}  // namespace contextium
