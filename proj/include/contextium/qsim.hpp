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

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "contextium/context.hpp"
#include "contextium/inequality.hpp"
#include "contextium/random.hpp"

namespace contextium {

inline constexpr int kMaxPureQubits = 10;
inline constexpr int kMaxMixedQubits = 8;
inline constexpr double kStateTolerance = 1e-10;
inline constexpr double kProbabilityTolerance = 1e-9;

enum class StateKind { pure, mixed, basis };
StateKind parse_state_kind(std::string_view s);

/// Pure vector or density matrix on n qubits. Qubit 0 (leftmost Pauli
/// character) is the most significant bit of the basis index.
struct Projection;

class QuantumState {
 public:
  /// Empty zero-qubit placeholder.
  QuantumState() = default;

  /// Throws InvariantError unless |psi|^2 = 1 within 1e-10.
  static QuantumState from_vector(Eigen::VectorXcd psi);
  /// Throws InvariantError unless rho is Hermitian, unit trace and PSD
  /// within 1e-10.
  static QuantumState from_density(Eigen::MatrixXcd rho);

  int num_qubits() const { return n_; }
  bool is_pure() const { return pure_; }
  /// Throws std::logic_error for mixed states.
  const Eigen::VectorXcd& vector() const;
  Eigen::MatrixXcd density() const;
  /// Re Tr(rho * op).
  double expectation(const Eigen::MatrixXcd& op) const;

 private:
  friend Projection project(const QuantumState&, const PauliString&, int);

  int n_ = 0;
  bool pure_ = true;
  Eigen::VectorXcd psi_;
  Eigen::MatrixXcd rho_;
};

/// pure: normalised complex Gaussian amplitudes; mixed: G G^dag / Tr for a
/// complex Gaussian G; basis: |0...0>. Deterministic per seed.
QuantumState random_state(int n, StateKind kind, std::uint64_t seed);

/// Dense 2^n x 2^n matrix of the Pauli string (tensor product, qubit 0 first).
Eigen::MatrixXcd pauli_matrix(const PauliString& p);

/// Tr(rho A B C); equals the context sign for every state.
double expectation_exact(const QuantumState& state, const Context& c);

struct Projection {
  double probability = 0.0;
  /// Post-measurement state; equals the input when probability is 0.
  QuantumState post;
};

/// Lueders update for observing `outcome` (+1 or -1) of observable m:
/// rho -> P rho P / p with P = (1 + outcome * m) / 2.
/// Throws StateCorruptionError if p leaves [-1e-9, 1 + 1e-9].
Projection project(const QuantumState& state, const PauliString& m, int outcome);

struct SequentialRun {
  std::array<int, 3> outcomes{};
  QuantumState post;
};

/// Measures the context members in stored order, sampling each outcome and
/// applying the Lueders update before the next measurement.
SequentialRun sequential_measure(const QuantumState& state, const Context& c, Rng& rng);
/// Same for an arbitrary sequence of observables; `state` is updated in place.
std::vector<int> measure_sequence(QuantumState& state, std::span<const PauliString> seq,
                                  Rng& rng);

/// Joint law of the three sequential outcomes, from the branch tree of
/// Lueders updates. Index bit k set means outcome k was -1.
std::array<double, 8> sequential_outcome_distribution(const QuantumState& state,
                                                      std::span<const PauliString, 3> order);

/// Each recorded outcome is negated independently with probability flip_p.
struct NoiseModel {
  double flip_p = 0.0;

  /// Per-correlation error 1 - (1 - 2 flip_p)^3.
  double eps_corr() const;
  /// Inverse of eps_corr(); eps in [0, 1].
  static NoiseModel from_eps_corr(double eps);
};

struct ContextEstimate {
  Context context;
  int coeff = 1;
  double corr = 0.0;
  double std_error = 0.0;
  /// Runs whose noiseless outcome product differed from the sign.
  std::int64_t sign_mismatches = 0;
};

struct ExperimentResult {
  int n = 0;
  std::string inequality;
  std::vector<ContextEstimate> per_context;
  double chi = 0.0;
  double chi_stderr = 0.0;
  std::int64_t bound = 0;
  double bound_shift = 0.0;
  double bound_used = 0.0;
  bool violated = false;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  NoiseModel noise;
};

/// Estimates every term's correlation from `shots` sequential runs with
/// readout flips. Context t draws from stream (seed, t), so results do not
/// depend on scheduling. bound_used = bound + bound_shift.
ExperimentResult run_experiment(const QuantumState& state, const Inequality& ineq,
                                const NoiseModel& noise, std::int64_t shots,
                                std::uint64_t seed, double bound_shift = 0.0);

struct ScanRow {
  double flip_p = 0.0;
  double eps_corr = 0.0;
  double chi = 0.0;
  double chi_stderr = 0.0;
  bool violated = false;
};

struct ThresholdScan {
  std::vector<ScanRow> rows;  // sorted by eps_corr
  std::int64_t bound = 0;
  std::int64_t num_terms = 0;
  /// eps_corr where chi crosses the bound, by linear interpolation between
  /// the bracketing grid points.
  std::optional<double> crossing_eps;
};

ThresholdScan threshold_scan(const QuantumState& state, const Inequality& ineq,
                             std::span<const double> flip_ps, std::int64_t shots,
                             std::uint64_t seed);

}  // namespace contextium
