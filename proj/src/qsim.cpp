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

#include "contextium/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "contextium/errors.hpp"

namespace contextium {

namespace {

using cd = std::complex<double>;

void check_qubits(int n, int cap, const char* what) {
  if (n < 1 || n > cap) {
    throw CapabilityError(std::string(what) + " supports 1 <= n <= " + std::to_string(cap) +
                          ", got n = " + std::to_string(n));
  }
}

void check_same_n(const QuantumState& s, int n) {
  if (s.num_qubits() != n) {
    throw DimensionError("state on " + std::to_string(s.num_qubits()) +
                         " qubits, operator on " + std::to_string(n));
  }
}

}  // namespace

StateKind parse_state_kind(std::string_view s) {
  if (s == "pure") return StateKind::pure;
  if (s == "mixed") return StateKind::mixed;
  if (s == "basis") return StateKind::basis;
  throw std::invalid_argument("unknown state kind '" + std::string(s) +
                              "' (expected pure, mixed or basis)");
}

QuantumState QuantumState::from_vector(Eigen::VectorXcd psi) {
  const auto dim = psi.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) throw DimensionError("state length must be 2^n");
  const int n = std::countr_zero(static_cast<std::uint64_t>(dim));
  check_qubits(n, kMaxPureQubits, "pure states");
  if (std::abs(psi.squaredNorm() - 1.0) > kStateTolerance) {
    throw InvariantError("pure state is not normalised");
  }
  QuantumState s;
  s.n_ = n;
  s.pure_ = true;
  s.psi_ = std::move(psi);
  return s;
}

QuantumState QuantumState::from_density(Eigen::MatrixXcd rho) {
  const auto dim = rho.rows();
  if (rho.cols() != dim || dim < 2 || (dim & (dim - 1)) != 0) {
    throw DimensionError("density matrix must be 2^n x 2^n");
  }
  const int n = std::countr_zero(static_cast<std::uint64_t>(dim));
  check_qubits(n, kMaxMixedQubits, "density matrices");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kStateTolerance) {
    throw InvariantError("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - cd(1.0)) > kStateTolerance) {
    throw InvariantError("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kStateTolerance) {
    throw InvariantError("density matrix is not positive semidefinite");
  }
  QuantumState s;
  s.n_ = n;
  s.pure_ = false;
  s.rho_ = std::move(rho);
  return s;
}

const Eigen::VectorXcd& QuantumState::vector() const {
  if (!pure_) throw std::logic_error("mixed state has no state vector");
  return psi_;
}

Eigen::MatrixXcd QuantumState::density() const {
  if (pure_) return psi_ * psi_.adjoint();
  return rho_;
}

double QuantumState::expectation(const Eigen::MatrixXcd& op) const {
  if (pure_) return psi_.dot(op * psi_).real();
  return (rho_ * op).trace().real();
}

QuantumState random_state(int n, StateKind kind, std::uint64_t seed) {
  const auto dim = Eigen::Index{1} << n;
  Rng rng(mix64(seed));
  std::normal_distribution<double> gauss;
  switch (kind) {
    case StateKind::basis: {
      check_qubits(n, kMaxPureQubits, "pure states");
      Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
      psi(0) = 1.0;
      return QuantumState::from_vector(std::move(psi));
    }
    case StateKind::pure: {
      check_qubits(n, kMaxPureQubits, "pure states");
      Eigen::VectorXcd psi(dim);
      for (Eigen::Index i = 0; i < dim; ++i) psi(i) = cd(gauss(rng), gauss(rng));
      psi.normalize();
      return QuantumState::from_vector(std::move(psi));
    }
    case StateKind::mixed: {
      check_qubits(n, kMaxMixedQubits, "density matrices");
      Eigen::MatrixXcd g(dim, dim);
      for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = cd(gauss(rng), gauss(rng));
      Eigen::MatrixXcd rho = g * g.adjoint();
      rho /= rho.trace();
      rho = (rho + rho.adjoint()) / 2.0;
      return QuantumState::from_density(std::move(rho));
    }
  }
  throw std::invalid_argument("unknown state kind");
}

Eigen::MatrixXcd pauli_matrix(const PauliString& p) {
  const int n = p.num_qubits();
  const auto dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  // Row i has its single nonzero in column i ^ flip; the value is the product
  // of per-qubit 2x2 entries.
  Eigen::Index flip = 0;
  for (int q = 0; q < n; ++q) {
    const char ch = p.at(q);
    if (ch == 'X' || ch == 'Y') flip |= Eigen::Index{1} << (n - 1 - q);
  }
  for (Eigen::Index row = 0; row < dim; ++row) {
    cd v = 1.0;
    for (int q = 0; q < n; ++q) {
      const int bit = static_cast<int>((row >> (n - 1 - q)) & 1);
      switch (p.at(q)) {
        case 'Z': if (bit) v = -v; break;
        // Y = [[0, -i], [i, 0]]: row 0 -> -i, row 1 -> +i
        case 'Y': v *= bit ? cd(0, 1) : cd(0, -1); break;
        default: break;
      }
    }
    m(row, row ^ flip) = v;
  }
  return m;
}

double expectation_exact(const QuantumState& state, const Context& c) {
  check_same_n(state, c.num_qubits());
  const Eigen::MatrixXcd abc = pauli_matrix(c[0]) * pauli_matrix(c[1]) * pauli_matrix(c[2]);
  return state.expectation(abc);
}

Projection project(const QuantumState& state, const PauliString& m, int outcome) {
  check_same_n(state, m.num_qubits());
  if (outcome != 1 && outcome != -1) throw std::invalid_argument("outcome must be +-1");
  const auto dim = Eigen::Index{1} << state.num_qubits();
  const Eigen::MatrixXcd proj =
      (Eigen::MatrixXcd::Identity(dim, dim) + static_cast<double>(outcome) * pauli_matrix(m)) / 2.0;

  Projection out;
  out.post = state;
  if (state.is_pure()) {
    Eigen::VectorXcd phi = proj * state.psi_;
    out.probability = phi.squaredNorm();
    if (out.probability > kProbabilityTolerance) out.post.psi_ = phi / std::sqrt(out.probability);
  } else {
    out.probability = (proj * state.rho_).trace().real();
    if (out.probability > kProbabilityTolerance) {
      out.post.rho_ = proj * state.rho_ * proj / out.probability;
    }
  }
  if (out.probability < -kProbabilityTolerance || out.probability > 1.0 + kProbabilityTolerance ||
      !std::isfinite(out.probability)) {
    throw StateCorruptionError("measurement probability " + std::to_string(out.probability) +
                               " outside [0, 1]");
  }
  out.probability = std::clamp(out.probability, 0.0, 1.0);
  if (out.probability <= kProbabilityTolerance) out.probability = 0.0;
  return out;
}

std::vector<int> measure_sequence(QuantumState& state, std::span<const PauliString> seq,
                                  Rng& rng) {
  std::vector<int> outcomes;
  outcomes.reserve(seq.size());
  for (const auto& m : seq) {
    Projection plus = project(state, m, +1);
    if (uniform01(rng) < plus.probability) {
      state = std::move(plus.post);
      outcomes.push_back(+1);
    } else {
      Projection minus = project(state, m, -1);
      if (minus.probability == 0.0) {
        throw StateCorruptionError("sampled an outcome of probability zero");
      }
      state = std::move(minus.post);
      outcomes.push_back(-1);
    }
  }
  return outcomes;
}

SequentialRun sequential_measure(const QuantumState& state, const Context& c, Rng& rng) {
  check_same_n(state, c.num_qubits());
  SequentialRun run;
  run.post = state;
  const auto outcomes = measure_sequence(run.post, c.members(), rng);
  std::copy(outcomes.begin(), outcomes.end(), run.outcomes.begin());
  return run;
}

std::array<double, 8> sequential_outcome_distribution(const QuantumState& state,
                                                      std::span<const PauliString, 3> order) {
  std::array<double, 8> dist{};
  auto branch = [&](auto&& self, const QuantumState& s, int depth, int index,
                    double weight) -> void {
    if (depth == 3) {
      dist[index] = weight;
      return;
    }
    for (int outcome : {+1, -1}) {
      Projection p = project(s, order[depth], outcome);
      const int next = index | (outcome < 0 ? 1 << depth : 0);
      if (p.probability == 0.0) continue;
      self(self, p.post, depth + 1, next, weight * p.probability);
    }
  };
  branch(branch, state, 0, 0, 1.0);
  return dist;
}

double NoiseModel::eps_corr() const {
  const double damp = 1.0 - 2.0 * flip_p;
  return 1.0 - damp * damp * damp;
}

NoiseModel NoiseModel::from_eps_corr(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("eps_corr must lie in [0, 1]");
  return NoiseModel{(1.0 - std::cbrt(1.0 - eps)) / 2.0};
}

namespace {

ContextEstimate estimate_context(const QuantumState& state, const Term& term, double flip_p,
                                 std::int64_t shots, Rng rng) {
  const auto& members = term.context.members();
  const std::array<double, 8> dist =
      sequential_outcome_distribution(state, std::span<const PauliString, 3>(members));
  std::array<double, 8> cumulative{};
  double acc = 0.0;
  for (int k = 0; k < 8; ++k) cumulative[k] = (acc += dist[k]);

  ContextEstimate est{term.context, term.coeff};
  std::int64_t sum = 0;
  for (std::int64_t shot = 0; shot < shots; ++shot) {
    const double u = uniform01(rng) * acc;
    int k = 0;
    while (k < 7 && u >= cumulative[k]) ++k;
    // Bits of k are the -1 outcomes; parity gives the product.
    int product = (std::popcount(static_cast<unsigned>(k)) & 1) ? -1 : 1;
    if (product != term.context.sign()) ++est.sign_mismatches;
    if (flip_p > 0.0) {
      for (int i = 0; i < 3; ++i) {
        if (uniform01(rng) < flip_p) product = -product;
      }
    }
    sum += product;
  }
  const double mean = static_cast<double>(sum) / static_cast<double>(shots);
  est.corr = mean;
  if (shots > 1) {
    const double var = (1.0 - mean * mean) * static_cast<double>(shots) /
                       static_cast<double>(shots - 1);
    est.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(shots));
  }
  return est;
}

}  // namespace

ExperimentResult run_experiment(const QuantumState& state, const Inequality& ineq,
                                const NoiseModel& noise, std::int64_t shots,
                                std::uint64_t seed, double bound_shift) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  if (!(noise.flip_p >= 0.0 && noise.flip_p <= 0.5)) {
    throw std::invalid_argument("flip_p must lie in [0, 0.5]");
  }
  check_same_n(state, ineq.n());

  const std::size_t m = ineq.size();
  std::vector<std::optional<ContextEstimate>> slots(m);
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(m, 1));
  auto work = [&](std::size_t w) {
    for (std::size_t t = w; t < m; t += workers) {
      slots[t] = estimate_context(state, ineq.terms()[t], noise.flip_p, shots,
                                  stream_rng(seed, t));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  ExperimentResult r;
  r.n = ineq.n();
  r.inequality = ineq.name();
  r.bound = ineq.bound();
  r.bound_shift = bound_shift;
  r.bound_used = static_cast<double>(ineq.bound()) + bound_shift;
  r.shots = shots;
  r.seed = seed;
  r.noise = noise;
  double var = 0.0;
  for (auto& slot : slots) {
    r.chi += slot->coeff * slot->corr;
    var += slot->std_error * slot->std_error;
    r.per_context.push_back(std::move(*slot));
  }
  r.chi_stderr = std::sqrt(var);
  r.violated = r.chi > r.bound_used;
  return r;
}

ThresholdScan threshold_scan(const QuantumState& state, const Inequality& ineq,
                             std::span<const double> flip_ps, std::int64_t shots,
                             std::uint64_t seed) {
  ThresholdScan scan;
  scan.bound = ineq.bound();
  scan.num_terms = static_cast<std::int64_t>(ineq.size());
  for (std::size_t i = 0; i < flip_ps.size(); ++i) {
    const NoiseModel noise{flip_ps[i]};
    const ExperimentResult r = run_experiment(state, ineq, noise, shots, mix64(seed + i));
    scan.rows.push_back({noise.flip_p, noise.eps_corr(), r.chi, r.chi_stderr, r.violated});
  }
  std::stable_sort(scan.rows.begin(), scan.rows.end(),
                   [](const ScanRow& a, const ScanRow& b) { return a.eps_corr < b.eps_corr; });
  const auto b = static_cast<double>(scan.bound);
  for (std::size_t i = 0; i + 1 < scan.rows.size(); ++i) {
    const ScanRow& lo = scan.rows[i];
    const ScanRow& hi = scan.rows[i + 1];
    if (lo.chi > b && hi.chi <= b) {
      const double t = (lo.chi - b) / (lo.chi - hi.chi);
      scan.crossing_eps = lo.eps_corr + t * (hi.eps_corr - lo.eps_corr);
      break;
    }
  }
  return scan;
}

}  // namespace contextium
