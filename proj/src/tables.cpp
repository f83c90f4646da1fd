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

#include <algorithm>
#include <set>
#include <string>

#include "contextium/errors.hpp"

namespace contextium {

namespace {

using Keys = std::array<std::uint64_t, 9>;

Keys keys_of(const KSTable::Grid& g) {
  Keys k{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) k[r * 3 + c] = g[r][c].key();
  return k;
}

KSTable::Grid parse_grid(const std::array<const char*, 9>& cells) {
  KSTable::Grid g;
  for (int i = 0; i < 9; ++i) g[i / 3][i % 3] = PauliString::parse(cells[i]);
  return g;
}

}  // namespace

KSTable KSTable::from_grid(const Grid& grid) {
  std::set<PauliString> seen;
  for (const auto& row : grid)
    for (const auto& p : row) seen.insert(p);
  if (seen.size() != 9) throw InvariantError("table entries must be distinct");

  std::vector<Context> rows, cols;
  try {
    for (int i = 0; i < 3; ++i) {
      rows.push_back(Context::make(grid[i][0], grid[i][1], grid[i][2]));
      cols.push_back(Context::make(grid[0][i], grid[1][i], grid[2][i]));
    }
  } catch (const DimensionError& e) {
    throw InvariantError(std::string("table line: ") + e.what());
  }
  return KSTable(grid, std::move(rows), std::move(cols));
}

std::optional<KSTable> KSTable::try_from_grid(const Grid& grid) {
  try {
    return from_grid(grid);
  } catch (const InvariantError&) {
    return std::nullopt;
  }
}

std::vector<Context> KSTable::lines() const {
  std::vector<Context> out = rows_;
  out.insert(out.end(), cols_.begin(), cols_.end());
  return out;
}

int KSTable::negative_lines() const {
  int neg = 0;
  for (const auto& c : rows_) neg += c.negative();
  for (const auto& c : cols_) neg += c.negative();
  return neg;
}

KSTable KSTable::canonical() const {
  std::array<int, 3> rp{0, 1, 2};
  Grid best = grid_;
  Keys best_keys = keys_of(grid_);
  do {
    std::array<int, 3> cp{0, 1, 2};
    do {
      for (int t = 0; t < 2; ++t) {
        Grid g;
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c)
            g[r][c] = t == 0 ? grid_[rp[r]][cp[c]] : grid_[cp[c]][rp[r]];
        const Keys k = keys_of(g);
        if (k < best_keys) {
          best_keys = k;
          best = g;
        }
      }
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
  return from_grid(best);
}

KSTable peres_mermin_table() {
  return KSTable::from_grid(parse_grid({"XX", "YZ", "ZY",
                                        "YY", "ZX", "XZ",
                                        "ZZ", "XY", "YX"}));
}

KSTable table2() {
  return KSTable::from_grid(parse_grid({"XX", "IX", "XI",
                                        "YY", "ZX", "XZ",
                                        "ZZ", "ZI", "IZ"}));
}

std::vector<KSTable> enumerate_tables(int n) {
  if (n != 2) {
    throw CapabilityError("table enumeration is only implemented for n = 2, got n = " +
                          std::to_string(n));
  }
  const std::vector<Context> contexts = enumerate_contexts(2);
  auto disjoint = [](const Context& a, const Context& b) {
    for (const auto& p : a.members())
      if (b.contains(p)) return false;
    return true;
  };

  std::set<Keys> seen;
  std::vector<KSTable> out;
  const std::size_t m = contexts.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!disjoint(contexts[i], contexts[j])) continue;
      for (std::size_t k = j + 1; k < m; ++k) {
        if (!disjoint(contexts[i], contexts[k]) || !disjoint(contexts[j], contexts[k])) continue;
        const auto& r0 = contexts[i].members();
        auto r1 = contexts[j].members();
        auto r2 = contexts[k].members();
        std::sort(r1.begin(), r1.end());
        do {
          std::sort(r2.begin(), r2.end());
          do {
            const auto t = KSTable::try_from_grid({r0, r1, r2});
            if (!t) continue;
            KSTable c = t->canonical();
            if (seen.insert(keys_of(c.grid())).second) out.push_back(c);
          } while (std::next_permutation(r2.begin(), r2.end()));
        } while (std::next_permutation(r1.begin(), r1.end()));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const KSTable& a, const KSTable& b) {
    return keys_of(a.grid()) < keys_of(b.grid());
  });
  return out;
}

}  // namespace contextium
