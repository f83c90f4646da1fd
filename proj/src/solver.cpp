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

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "contextium/errors.hpp"
#include "contextium/random.hpp"

namespace contextium {

namespace {

// XOR-constraint view of an inequality: variable bit 1 means outcome -1, and
// term t is satisfied iff the parity of its three bits equals odd[t].
struct XorInstance {
  std::vector<PauliString> vars;
  std::vector<std::array<std::uint32_t, 3>> term_vars;
  std::vector<std::uint8_t> odd;
  std::vector<std::vector<std::uint32_t>> occurrences;

  explicit XorInstance(const Inequality& ineq) : vars(ineq.observables()) {
    std::unordered_map<PauliString, std::uint32_t> index;
    for (std::uint32_t i = 0; i < vars.size(); ++i) index.emplace(vars[i], i);
    occurrences.resize(vars.size());
    for (std::uint32_t t = 0; t < ineq.size(); ++t) {
      const auto& term = ineq.terms()[t];
      std::array<std::uint32_t, 3> tv{};
      for (int k = 0; k < 3; ++k) {
        tv[k] = index.at(term.context[k]);
        occurrences[tv[k]].push_back(t);
      }
      term_vars.push_back(tv);
      odd.push_back(term.context.negative() ? 1 : 0);
    }
  }

  std::size_t num_terms() const { return term_vars.size(); }

  bool satisfied(std::size_t t, const std::vector<std::uint8_t>& bits) const {
    const auto& tv = term_vars[t];
    return (bits[tv[0]] ^ bits[tv[1]] ^ bits[tv[2]]) == odd[t];
  }

  Assignment to_assignment(const std::vector<std::uint8_t>& bits) const {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a.set(vars[i], bits[i] ? -1 : 1);
    return a;
  }
};

void check_witness(const Inequality& ineq, const SolveReport& r) {
  if (satisfied_count(ineq, r.witness) != r.s) {
    throw InvariantError("solver witness does not reproduce its reported s");
  }
}

bool is_full_context_set(const Inequality& ineq) {
  const int n = ineq.n();
  if (n < kMinEnumerationQubits || n > kMaxEnumerationQubits) return false;
  if (ineq.size() != count_contexts_closed_form(n)) return false;
  std::set<Context> distinct;
  for (const auto& t : ineq.terms()) distinct.insert(t.context);
  return distinct.size() == ineq.size();
}

}  // namespace

Assignment Assignment::constant(const std::vector<PauliString>& observables, int value) {
  Assignment a;
  for (const auto& p : observables) a.set(p, value);
  return a;
}

void Assignment::set(const PauliString& p, int value) {
  if (value != 1 && value != -1) {
    throw std::invalid_argument("assignment values must be +1 or -1, got " +
                                std::to_string(value));
  }
  values_[p] = value;
}

std::optional<int> Assignment::get(const PauliString& p) const {
  const auto it = values_.find(p);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

int Assignment::at(const PauliString& p) const {
  const auto it = values_.find(p);
  if (it == values_.end()) {
    throw IncompleteAssignmentError("assignment has no value for " + p.str());
  }
  return it->second;
}

std::int64_t satisfied_count(const Inequality& ineq, const Assignment& a) {
  std::int64_t sat = 0;
  for (const auto& t : ineq.terms()) {
    const auto& c = t.context;
    if (a.at(c[0]) * a.at(c[1]) * a.at(c[2]) == c.sign()) ++sat;
  }
  return sat;
}

std::int64_t chi(const Inequality& ineq, const Assignment& a) {
  return 2 * satisfied_count(ineq, a) - static_cast<std::int64_t>(ineq.size());
}

std::string_view to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::exact_bruteforce: return "exact-bruteforce";
    case SolveMethod::branch_and_bound: return "branch-and-bound";
    case SolveMethod::local_search: return "local-search";
  }
  return "unknown";
}

SolveReport solve_bruteforce(const Inequality& ineq) {
  const XorInstance inst(ineq);
  const std::size_t v = inst.vars.size();
  if (v > kMaxBruteForceVariables) {
    throw CapabilityError("brute force is capped at " +
                          std::to_string(kMaxBruteForceVariables) + " observables, got " +
                          std::to_string(v) + "; use branch-and-bound or local search");
  }
  std::vector<std::uint32_t> masks;
  for (const auto& tv : inst.term_vars) {
    masks.push_back((1u << tv[0]) | (1u << tv[1]) | (1u << tv[2]));
  }

  std::int64_t best = -1;
  std::uint32_t best_bits = 0;
  const std::uint64_t total = std::uint64_t{1} << v;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const auto b = static_cast<std::uint32_t>(bits);
    std::int64_t sat = 0;
    for (std::size_t t = 0; t < masks.size(); ++t) {
      sat += static_cast<std::uint32_t>(std::popcount(b & masks[t]) & 1) == inst.odd[t];
    }
    if (sat > best) {
      best = sat;
      best_bits = b;
    }
  }

  std::vector<std::uint8_t> bits(v);
  for (std::size_t i = 0; i < v; ++i) bits[i] = (best_bits >> i) & 1;
  SolveReport r;
  r.s = std::max<std::int64_t>(best, 0);
  r.num_terms = static_cast<std::int64_t>(inst.num_terms());
  r.optimal = true;
  r.witness = inst.to_assignment(bits);
  r.method = SolveMethod::exact_bruteforce;
  r.effort = total;
  check_witness(ineq, r);
  return r;
}

SolveReport solve_branch_and_bound(const Inequality& ineq, std::uint64_t node_budget) {
  const XorInstance inst(ineq);
  const std::size_t v = inst.vars.size();
  const std::size_t m = inst.num_terms();

  std::vector<std::uint32_t> order(v);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return inst.occurrences[a].size() > inst.occurrences[b].size();
  });
  std::vector<std::size_t> position(v);
  for (std::size_t d = 0; d < v; ++d) position[order[d]] = d;

  // Each term is decided once its deepest variable is assigned.
  std::vector<std::vector<std::uint32_t>> decided_at(v);
  for (std::uint32_t t = 0; t < m; ++t) {
    const auto& tv = inst.term_vars[t];
    const std::size_t depth =
        std::max({position[tv[0]], position[tv[1]], position[tv[2]]});
    decided_at[depth].push_back(t);
  }

  std::vector<std::uint8_t> bits(v, 0);
  std::vector<std::uint8_t> best_bits(v, 0);
  std::int64_t best = 0;
  for (std::size_t t = 0; t < m; ++t) best += inst.satisfied(t, bits);
  best_bits = bits;

  std::uint64_t nodes = 0;
  auto dfs = [&](auto&& self, std::size_t depth, std::int64_t sat,
                 std::int64_t undecided) -> void {
    if (++nodes > node_budget) {
      throw CapabilityError("branch-and-bound exceeded its node budget of " +
                            std::to_string(node_budget) + "; use local search");
    }
    if (sat + undecided <= best) return;
    if (depth == v) {
      best = sat;
      best_bits = bits;
      return;
    }
    const std::uint32_t var = order[depth];
    const auto& closing = decided_at[depth];
    for (std::uint8_t value : {std::uint8_t{0}, std::uint8_t{1}}) {
      bits[var] = value;
      std::int64_t gained = 0;
      for (std::uint32_t t : closing) gained += inst.satisfied(t, bits);
      self(self, depth + 1, sat + gained,
           undecided - static_cast<std::int64_t>(closing.size()));
    }
    bits[var] = 0;
  };
  dfs(dfs, 0, 0, static_cast<std::int64_t>(m));

  SolveReport r;
  r.s = best;
  r.num_terms = static_cast<std::int64_t>(m);
  r.optimal = true;
  r.witness = inst.to_assignment(best_bits);
  r.method = SolveMethod::branch_and_bound;
  r.effort = nodes;
  check_witness(ineq, r);
  return r;
}

SolveReport solve_exact(const Inequality& ineq, std::uint64_t node_budget) {
  if (ineq.observables().size() <= static_cast<std::size_t>(kMaxBruteForceVariables)) {
    return solve_bruteforce(ineq);
  }
  return solve_branch_and_bound(ineq, node_budget);
}

SolveReport solve_local_search(const Inequality& ineq, const LocalSearchOptions& opts) {
  if (opts.restarts < 1) throw std::invalid_argument("local search needs >= 1 restart");
  if (opts.noise < 0.0 || opts.noise > 1.0) {
    throw std::invalid_argument("noise probability must lie in [0, 1]");
  }
  const XorInstance inst(ineq);
  const std::size_t v = inst.vars.size();
  const std::size_t m = inst.num_terms();
  LocalSearchOptions used = opts;
  if (used.max_flips <= 0) used.max_flips = 20 * static_cast<std::int64_t>(m);

  std::int64_t best = -1;
  int best_restart = -1;
  std::vector<std::uint8_t> best_bits(v, 0);
  std::uint64_t flips_total = 0;

  std::vector<std::uint8_t> bits(v);
  std::vector<std::uint8_t> sat(m);
  std::vector<std::int32_t> gain(v);
  std::vector<std::uint32_t> unsat;
  std::vector<std::int64_t> unsat_pos(m);

  auto add_unsat = [&](std::uint32_t t) {
    unsat_pos[t] = static_cast<std::int64_t>(unsat.size());
    unsat.push_back(t);
  };
  auto remove_unsat = [&](std::uint32_t t) {
    const auto pos = unsat_pos[t];
    const std::uint32_t last = unsat.back();
    unsat[pos] = last;
    unsat_pos[last] = pos;
    unsat.pop_back();
    unsat_pos[t] = -1;
  };

  for (int restart = 0; restart < used.restarts; ++restart) {
    Rng rng = stream_rng(used.seed, static_cast<std::uint64_t>(restart));
    for (std::size_t i = 0; i < v; ++i) {
      bits[i] = restart == 0 ? 0 : static_cast<std::uint8_t>(rng() & 1);
    }
    unsat.clear();
    std::fill(gain.begin(), gain.end(), 0);
    std::int64_t n_sat = 0;
    for (std::uint32_t t = 0; t < m; ++t) {
      sat[t] = inst.satisfied(t, bits);
      n_sat += sat[t];
      if (!sat[t]) add_unsat(t); else unsat_pos[t] = -1;
      for (std::uint32_t w : inst.term_vars[t]) gain[w] += sat[t] ? -1 : 1;
    }

    std::int64_t restart_best = n_sat;
    std::vector<std::uint8_t> restart_bits = bits;
    for (std::int64_t flip = 0; flip < used.max_flips && !unsat.empty(); ++flip) {
      const std::uint32_t t = unsat[rng() % unsat.size()];
      const auto& tv = inst.term_vars[t];
      std::uint32_t var;
      if (uniform01(rng) < used.noise) {
        var = tv[rng() % 3];
      } else {
        var = tv[0];
        for (int k = 1; k < 3; ++k) {
          if (gain[tv[k]] > gain[var] || (gain[tv[k]] == gain[var] && tv[k] < var)) {
            var = tv[k];
          }
        }
      }
      // Flipping one variable toggles every constraint that contains it.
      bits[var] ^= 1;
      for (std::uint32_t u : inst.occurrences[var]) {
        sat[u] ^= 1;
        const int delta = sat[u] ? -2 : 2;
        n_sat += sat[u] ? 1 : -1;
        if (sat[u]) remove_unsat(u); else add_unsat(u);
        for (std::uint32_t w : inst.term_vars[u]) gain[w] += delta;
      }
      ++flips_total;
      if (n_sat > restart_best) {
        restart_best = n_sat;
        restart_bits = bits;
      }
    }
    if (restart_best > best) {
      best = restart_best;
      best_restart = restart;
      best_bits = restart_bits;
    }
  }

  SolveReport r;
  r.s = best;
  r.num_terms = static_cast<std::int64_t>(m);
  r.optimal = false;
  r.witness = inst.to_assignment(best_bits);
  r.method = SolveMethod::local_search;
  r.effort = flips_total;
  r.local_search = used;
  r.best_restart = best_restart;
  check_witness(ineq, r);
  return r;
}

BoundReport noncontextual_bound(const Inequality& ineq, const LocalSearchOptions& opts) {
  const bool small =
      ineq.observables().size() <= static_cast<std::size_t>(kMaxBruteForceVariables);
  BoundReport out;
  if (is_full_context_set(ineq)) {
    const int n = ineq.n();
    const auto total = static_cast<std::int64_t>(count_contexts_closed_form(n));
    const auto positives = total - static_cast<std::int64_t>(count_negative_closed_form(n));
    out.s = positives;
    out.bound = 2 * positives - total;
    SolveReport search = small ? solve_exact(ineq) : solve_local_search(ineq, opts);
    if (search.s > positives) {
      throw BoundFalsifiedError(
          "a noncontextual model satisfies " + std::to_string(search.s) +
          " predictions of the full n = " + std::to_string(n) +
          " inequality, more than the " + std::to_string(positives) +
          " positive contexts: the counting bound is false");
    }
    if (small && search.s != positives) {
      throw InvariantError("exact optimum " + std::to_string(search.s) +
                           " differs from the counting bound " + std::to_string(positives));
    }
    out.optimal = small;
    out.source = small ? "counting, confirmed by exact search"
                       : "counting, local-search evidence only";
    out.search = std::move(search);
    return out;
  }
  SolveReport search = small ? solve_exact(ineq) : solve_local_search(ineq, opts);
  out.s = search.s;
  out.bound = search.bound();
  out.optimal = search.optimal;
  out.source = std::string(to_string(search.method));
  out.search = std::move(search);
  return out;
}

Inequality with_exact_bound(int n, std::vector<Context> contexts, std::string name) {
  Inequality probe(n, contexts, 0, name);
  const SolveReport r = solve_exact(probe);
  return Inequality(n, std::move(contexts), r.bound(), std::move(name));
}

ParityWitness table_parity_witness(const KSTable& t) {
  const auto lines = t.lines();
  const auto& g = t.grid();
  // Each entry must lie in exactly its own row and column.
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      int hits = 0;
      for (const auto& line : lines) hits += line.contains(g[r][c]);
      if (hits != 2 || !lines[r].contains(g[r][c]) || !lines[3 + c].contains(g[r][c])) {
        throw InvariantError("malformed table: " + g[r][c].str() +
                             " is not in exactly one row and one column");
      }
    }
  }

  ParityWitness w;
  for (const auto& line : lines) {
    w.sign_product *= line.sign();
    w.negative_lines += line.negative();
  }
  w.no_model = w.sign_product < 0;
  w.max_satisfiable = w.no_model ? 5 : 6;
  w.unsatisfied_line = w.no_model ? 5 : -1;

  // Rows of [9 cell bits | rhs]; cell (r, c) is bit 3r + c, bit 1 means -1.
  std::vector<std::uint32_t> eqs;
  for (int l = 0; l < 6; ++l) {
    if (l == w.unsatisfied_line) continue;
    std::uint32_t row = 0;
    for (int k = 0; k < 3; ++k) row |= 1u << (l < 3 ? 3 * l + k : 3 * k + (l - 3));
    if (lines[l].negative()) row |= 1u << 9;
    eqs.push_back(row);
  }
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < 9 && rank < eqs.size(); ++col) {
    std::size_t p = rank;
    while (p < eqs.size() && !((eqs[p] >> col) & 1)) ++p;
    if (p == eqs.size()) continue;
    std::swap(eqs[p], eqs[rank]);
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (i != rank && ((eqs[i] >> col) & 1)) eqs[i] ^= eqs[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < eqs.size(); ++i) {
    if (eqs[i] >> 9) throw InvariantError("parity system for table is inconsistent");
  }
  std::uint32_t cells = 0;  // free cells stay +1
  for (std::size_t i = 0; i < rank; ++i) {
    if (eqs[i] >> 9) cells |= 1u << pivot_col[i];
  }
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) w.model.set(g[r][c], ((cells >> (3 * r + c)) & 1) ? -1 : 1);
  return w;
}

}  // namespace contextium
