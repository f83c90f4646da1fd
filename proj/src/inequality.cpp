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

#include "contextium/inequality.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "contextium/errors.hpp"
#include "contextium/solver.hpp"
#include "contextium/tables.hpp"

namespace contextium {

namespace {

Inequality from_table(const KSTable& t, std::string name) {
  const ParityWitness w = table_parity_witness(t);
  const auto lines = t.lines();
  const auto n_terms = static_cast<std::int64_t>(lines.size());
  return Inequality(t.num_qubits(), lines, 2 * w.max_satisfiable - n_terms,
                    std::move(name));
}

}  // namespace

Inequality::Inequality(int n, std::vector<Context> contexts, std::int64_t bound,
                       std::string name)
    : n_(n), bound_(bound), name_(std::move(name)) {
  terms_.reserve(contexts.size());
  for (auto& c : contexts) {
    if (c.num_qubits() != n) {
      throw DimensionError("context on " + std::to_string(c.num_qubits()) +
                           " qubits in a " + std::to_string(n) + "-qubit inequality");
    }
    const int sign = c.sign();
    terms_.push_back(Term{std::move(c), sign});
  }
  if (bound_ > quantum_value() || bound_ < -quantum_value()) {
    throw InvariantError("bound " + std::to_string(bound_) + " outside [-N, N]");
  }
}

std::int64_t Inequality::negative_count() const {
  return std::count_if(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.context.negative(); });
}

std::vector<PauliString> Inequality::observables() const {
  std::set<PauliString> s;
  for (const auto& t : terms_)
    for (const auto& p : t.context.members()) s.insert(p);
  return {s.begin(), s.end()};
}

std::vector<Context> Inequality::contexts() const {
  std::vector<Context> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.context);
  return out;
}

Rational Inequality::tolerated_error() const {
  if (terms_.empty()) throw InvariantError("empty inequality");
  return Rational(quantum_value() - bound_, quantum_value());
}

Rational Inequality::degree_of_violation() const {
  if (bound_ == 0) throw InvariantError("degree of violation undefined for bound 0");
  return Rational(quantum_value(), bound_);
}

Inequality peres_mermin_inequality() { return from_table(peres_mermin_table(), "pm"); }

Inequality table2_inequality() { return from_table(table2(), "table2"); }

Inequality two_qubit_15_inequality() {
  const KSTable pm = peres_mermin_table();
  std::vector<Context> contexts = pm.lines();
  for (char p : {'X', 'Y', 'Z'}) {
    for (char q : {'X', 'Y', 'Z'}) {
      const std::string pq{p, q}, pi{p, 'I'}, iq{'I', q};
      contexts.push_back(Context::make(PauliString::parse(pq), PauliString::parse(pi),
                                       PauliString::parse(iq)));
    }
  }
  std::sort(contexts.begin(), contexts.end());
  const auto n_terms = static_cast<std::int64_t>(contexts.size());
  const auto positives = std::count_if(contexts.begin(), contexts.end(),
                                       [](const Context& c) { return !c.negative(); });
  return Inequality(2, std::move(contexts), 2 * positives - n_terms, "two-qubit-15");
}

Inequality full_inequality(int n) {
  std::vector<Context> contexts = enumerate_contexts(n);
  const auto total = static_cast<std::int64_t>(count_contexts_closed_form(n));
  const auto negatives = static_cast<std::int64_t>(count_negative_closed_form(n));
  const auto found_neg = std::count_if(contexts.begin(), contexts.end(),
                                       [](const Context& c) { return c.negative(); });
  if (static_cast<std::int64_t>(contexts.size()) != total || found_neg != negatives) {
    throw InvariantError("enumeration disagrees with closed-form counts at n = " +
                         std::to_string(n));
  }
  const std::int64_t positives = total - negatives;
  return Inequality(n, std::move(contexts), 2 * positives - total, "full");
}

Inequality inequality_by_name(std::string_view name, int n) {
  if (name == "pm") return peres_mermin_inequality();
  if (name == "table2") return table2_inequality();
  if (name == "two-qubit-15") return two_qubit_15_inequality();
  if (name == "full") return full_inequality(n);
  throw std::invalid_argument("unknown inequality '" + std::string(name) +
                              "' (expected pm, table2, two-qubit-15 or full)");
}

}  // namespace contextium
