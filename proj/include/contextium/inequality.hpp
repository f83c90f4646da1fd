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
#include <string>
#include <string_view>
#include <vector>

#include "contextium/context.hpp"
#include "contextium/rational.hpp"

namespace contextium {

struct Term {
  Context context;
  int coeff = 1;
};

/**
 * sum_{positive} <C_i> - sum_{negative} <C'_i> <= bound.
 *
 * Each coefficient equals its context's sign, so an ideal quantum
 * measurement contributes +1 per term and the quantum value is the number of
 * terms. The bound is 2s - N, with s the maximum number of context
 * predictions a noncontextual model satisfies.
 */
class Inequality {
 public:
  Inequality(int n, std::vector<Context> contexts, std::int64_t bound,
             std::string name = "custom");

  int n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  std::int64_t bound() const { return bound_; }
  std::int64_t quantum_value() const { return static_cast<std::int64_t>(terms_.size()); }
  const std::string& name() const { return name_; }

  std::int64_t negative_count() const;
  /// Distinct observables, sorted.
  std::vector<PauliString> observables() const;
  std::vector<Context> contexts() const;

  /// (quantum_value - bound) / N.
  Rational tolerated_error() const;
  /// quantum_value / bound.
  Rational degree_of_violation() const;

 private:
  int n_;
  std::vector<Term> terms_;
  std::int64_t bound_;
  std::string name_;
};

/// The six lines of the Peres-Mermin square; bound 4.
Inequality peres_mermin_inequality();
/// The six lines of table2(); bound 4.
Inequality table2_inequality();
/// Peres-Mermin rows and columns plus the nine {pq, pI, Iq}; bound 9.
Inequality two_qubit_15_inequality();
/// Every context on n qubits with bound 2S(n) - N(n) from the counting
/// formulas. 2 <= n <= 6.
Inequality full_inequality(int n);

/// "pm", "table2", "two-qubit-15" or "full" (n used only by "full").
Inequality inequality_by_name(std::string_view name, int n);

}  // namespace contextium
