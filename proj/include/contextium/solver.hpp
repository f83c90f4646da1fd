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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contextium/inequality.hpp"
#include "contextium/tables.hpp"

namespace contextium {

/// Noncontextual hidden-variable model: one +-1 outcome per observable.
class Assignment {
 public:
  Assignment() = default;
  static Assignment constant(const std::vector<PauliString>& observables, int value);

  /// Throws std::invalid_argument unless value is +1 or -1.
  void set(const PauliString& p, int value);
  std::optional<int> get(const PauliString& p) const;
  /// Throws IncompleteAssignmentError naming p.
  int at(const PauliString& p) const;
  std::size_t size() const { return values_.size(); }
  const std::map<PauliString, int>& values() const { return values_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::map<PauliString, int> values_;
};

/// Terms whose outcome product v(A)v(B)v(C) equals the context sign.
/// Throws IncompleteAssignmentError.
std::int64_t satisfied_count(const Inequality& ineq, const Assignment& a);
/// Value of the correlation sum for a deterministic model: 2*satisfied - N.
std::int64_t chi(const Inequality& ineq, const Assignment& a);

enum class SolveMethod { exact_bruteforce, branch_and_bound, local_search };
std::string_view to_string(SolveMethod m);

struct LocalSearchOptions {
  int restarts = 100;
  std::int64_t max_flips = 0;  // 0 means 20 * N
  double noise = 0.3;
  std::uint64_t seed = 42;
};

struct SolveReport {
  std::int64_t s = 0;
  std::int64_t num_terms = 0;
  bool optimal = false;
  Assignment witness;
  SolveMethod method = SolveMethod::exact_bruteforce;
  std::uint64_t effort = 0;  // assignments, nodes or flips
  std::optional<LocalSearchOptions> local_search;
  int best_restart = -1;

  std::int64_t bound() const { return 2 * s - num_terms; }
};

inline constexpr int kMaxBruteForceVariables = 24;
inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// Exhaustive over all 2^V assignments. Throws CapabilityError if V > 24.
SolveReport solve_bruteforce(const Inequality& ineq);
/// Depth-first search over variables in descending occurrence order,
/// pruning when satisfied + undecided <= best. Throws CapabilityError when
/// the node budget runs out.
SolveReport solve_branch_and_bound(const Inequality& ineq,
                                   std::uint64_t node_budget = kDefaultNodeBudget);
/// Brute force up to 24 observables, branch-and-bound beyond.
SolveReport solve_exact(const Inequality& ineq,
                        std::uint64_t node_budget = kDefaultNodeBudget);
/// WalkSAT-style search on the XOR constraints. Restart 0 starts from the
/// all-(+1) model, later restarts from uniform random models; each restart
/// draws from its own stream derived from (seed, restart). Never optimal.
SolveReport solve_local_search(const Inequality& ineq, const LocalSearchOptions& opts = {});

struct BoundReport {
  std::int64_t bound = 0;
  std::int64_t s = 0;
  bool optimal = false;
  std::string source;
  std::optional<SolveReport> search;
};

/// For the full context set on n qubits the bound is 2S(n) - N(n) from the
/// counting formulas; it is confirmed exactly when the observables fit the
/// brute-force cap, and otherwise checked against local search (a better
/// model throws BoundFalsifiedError). Other inequalities use solve_exact
/// when feasible and local search otherwise.
BoundReport noncontextual_bound(const Inequality& ineq, const LocalSearchOptions& opts = {});

/// Inequality over `contexts` with its bound from solve_exact.
Inequality with_exact_bound(int n, std::vector<Context> contexts, std::string name = "custom");

/// Parity argument for a KS table.
struct ParityWitness {
  int sign_product = 1;
  int negative_lines = 0;
  /// Odd number of negative lines.
  bool no_model = false;
  /// 5 for a no-model table, else 6.
  int max_satisfiable = 6;
  /// Index into KSTable::lines() of the line `model` leaves unsatisfied, -1 if none.
  int unsatisfied_line = -1;
  Assignment model;
};

/// Every observable sits in one row and one column, so the product of all six
/// line outcome products is +1 for any model; an odd number of negative lines
/// leaves at least one line violated. `model` is found by GF(2) elimination on
/// the remaining lines. Throws InvariantError on a malformed table.
ParityWitness table_parity_witness(const KSTable& t);

}  // namespace contextium
