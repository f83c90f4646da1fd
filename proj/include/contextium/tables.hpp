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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "contextium/context.hpp"
#include "contextium/pauli.hpp"

namespace contextium {

/// 3 x 3 grid of distinct observables whose rows and columns are contexts.
class KSTable {
 public:
  using Grid = std::array<std::array<PauliString, 3>, 3>;

  /// Throws InvariantError when a line is not a context or entries repeat.
  static KSTable from_grid(const Grid& grid);
  /// As from_grid, but returns nullopt instead of throwing InvariantError.
  static std::optional<KSTable> try_from_grid(const Grid& grid);

  const Grid& grid() const { return grid_; }
  const std::vector<Context>& rows() const { return rows_; }
  const std::vector<Context>& cols() const { return cols_; }
  /// Rows then columns.
  std::vector<Context> lines() const;
  int num_qubits() const { return grid_[0][0].num_qubits(); }
  int negative_lines() const;
  /// Odd number of negative lines: no +-1 assignment satisfies all six.
  bool admits_no_model() const { return negative_lines() % 2 == 1; }

  /// Lexicographically smallest image under row permutations, column
  /// permutations and transposition (72 symmetries).
  KSTable canonical() const;

  friend bool operator==(const KSTable& a, const KSTable& b) { return a.grid_ == b.grid_; }

 private:
  KSTable(const Grid& grid, std::vector<Context> rows, std::vector<Context> cols)
      : grid_(grid), rows_(std::move(rows)), cols_(std::move(cols)) {}

  Grid grid_;
  std::vector<Context> rows_;
  std::vector<Context> cols_;
};

/// Two-qubit square with positive rows and negative columns:
///   XX YZ ZY / YY ZX XZ / ZZ XY YX
KSTable peres_mermin_table();

/// Square keeping row {YY, ZX, XZ} and column {XX, YY, ZZ} of the
/// Peres-Mermin square and filling the rest with single-qubit observables:
///   XX IX XI / YY ZX XZ / ZZ ZI IZ
KSTable table2();

/// All distinct tables (up to the 72 grid symmetries) on n = 2, in canonical
/// form and sorted. Throws CapabilityError for n != 2.
std::vector<KSTable> enumerate_tables(int n = 2);

}  // namespace contextium
