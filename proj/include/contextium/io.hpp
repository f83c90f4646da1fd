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

#include <json.hpp>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "contextium/context.hpp"
#include "contextium/inequality.hpp"
#include "contextium/qsim.hpp"
#include "contextium/scaling.hpp"
#include "contextium/solver.hpp"
#include "contextium/symmetry.hpp"
#include "contextium/tables.hpp"

namespace contextium::io {

using nlohmann::json;

/// {"members": ["XXI", "YZX", "ZYX"], "sign": 1}
json to_json(const Context& c);
/// Inverse of to_json; re-validates and checks the recorded sign.
Context context_from_json(const json& j);

/// {"n": 3, "name": "full", "terms": [{"context": ..., "coeff": 1}, ...],
///  "bound": 135, "quantum_value": 315}
json to_json(const Inequality& ineq);
Inequality inequality_from_json(const json& j);

json to_json(const Assignment& a);
/// {"s": 12, "optimal": true, "method": "exact-bruteforce", "bound": 9,
///  "witness": {"XI": 1, ...}, "effort": ..., "seed": 42 (local search only)}
json to_json(const SolveReport& r);
json to_json(const BoundReport& r);

json to_json(const KSTable& t);
json to_json(const ParityWitness& w);
json to_json(const SymmetryClass& c);
json to_json(const ScalingRow& r);
json to_json(const LimitCheck& c);

/// {"n": 2, "chi": ..., "bound": 9, "violated": true, "shots": ...,
///  "flip_p": ..., "eps_corr": ..., "per_context": [{"context": [...],
///  "corr": ..., "stderr": ...}], "seed": 42}
json to_json(const ExperimentResult& r);
json to_json(const ThresholdScan& s);

/// Shortest round-trip decimal.
std::string format_double(double v);

/// members,sign
void write_contexts_csv(std::ostream& os, std::span<const Context> contexts);
/// n,N,negatives,S
void write_counts_csv(std::ostream& os, std::span<const ScalingRow> rows);
/// n,epsilon,D (6 significant digits from the exact rationals)
void write_fig1_csv(std::ostream& os, std::span<const ScalingRow> rows);
/// eps_corr,chi_mean,chi_stderr,violated
void write_scan_csv(std::ostream& os, const ThresholdScan& scan);

}  // namespace contextium::io
