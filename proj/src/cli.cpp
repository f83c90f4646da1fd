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

#include "contextium/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "contextium/context.hpp"
#include "contextium/errors.hpp"
#include "contextium/inequality.hpp"
#include "contextium/io.hpp"
#include "contextium/qsim.hpp"
#include "contextium/scaling.hpp"
#include "contextium/solver.hpp"
#include "contextium/symmetry.hpp"
#include "contextium/tables.hpp"

namespace contextium::cli {

namespace {

using io::json;

struct Options {
  int n = 2;
  int n_max = 5;
  int verify_max = kDefaultVerifyMax;
  std::string format;
  std::string out_path;
  std::string name = "full";
  std::string method = "exact";
  int restarts = 100;
  std::int64_t max_flips = 0;
  double noise = 0.3;
  std::uint64_t seed = 42;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::string state = "pure";
  std::int64_t shots = 10000;
  double flip_p = 0.0;
  double bound_shift = 0.0;
  std::string grid = "0:0.5:0.05";
};

const std::vector<std::string> kInequalityNames{"pm", "table2", "two-qubit-15", "full"};

json config_json(const std::string& sub, const Options& o) {
  json c{{"subcommand", sub}};
  if (sub == "enumerate") {
    c["n"] = o.n;
    c["format"] = o.format;
  } else if (sub == "counts" || sub == "report") {
    c["n_max"] = o.n_max;
    c["verify_max"] = o.verify_max;
    c["format"] = o.format;
  } else if (sub == "bound") {
    c["n"] = o.n;
    c["name"] = o.name;
    c["method"] = o.method;
    if (o.method == "local") {
      c["restarts"] = o.restarts;
      c["max_flips"] = o.max_flips;
      c["noise"] = o.noise;
      c["seed"] = o.seed;
    } else if (o.method == "bnb") {
      c["node_budget"] = o.node_budget;
    }
  } else if (sub == "inequality") {
    c["n"] = o.n;
    c["name"] = o.name;
  } else if (sub == "classify") {
    c["n"] = o.n;
  } else if (sub == "simulate" || sub == "scan") {
    c["n"] = o.n;
    c["name"] = o.name;
    c["state"] = o.state;
    c["shots"] = o.shots;
    c["seed"] = o.seed;
    if (sub == "simulate") {
      c["flip_p"] = o.flip_p;
      c["bound_shift"] = o.bound_shift;
    } else {
      c["flip_p_grid"] = o.grid;
      c["format"] = o.format;
    }
  }
  if (!o.out_path.empty()) c["out"] = o.out_path;
  return c;
}

void emit_json(std::ostream& os, json j, const json& config) {
  j["config"] = config;
  os << j.dump(2) << '\n';
}

json run_bound(const Options& o, const json& config) {
  const Inequality ineq = inequality_by_name(o.name, o.n);
  SolveReport r;
  if (o.method == "exact") {
    r = solve_exact(ineq, o.node_budget);
  } else if (o.method == "bnb") {
    r = solve_branch_and_bound(ineq, o.node_budget);
  } else {
    r = solve_local_search(ineq, {o.restarts, o.max_flips, o.noise, o.seed});
  }
  json out = io::to_json(r);
  if (o.name == "full") {
    const auto total = static_cast<std::int64_t>(count_contexts_closed_form(o.n));
    const auto positives = total - static_cast<std::int64_t>(count_negative_closed_form(o.n));
    out["counting_s"] = positives;
    out["falsified"] = r.s > positives;
    out["counting_bound"] = 2 * positives - total;
  }
  out["inequality"] = ineq.name();
  out["config"] = config;
  return out;
}

json run_tables(const json& config) {
  json tables = json::array();
  for (const auto& t : enumerate_tables(2)) {
    json tj = io::to_json(t);
    tj["witness"] = io::to_json(table_parity_witness(t));
    tj["max_satisfiable_exact"] = solve_exact(Inequality(2, t.lines(), 0, "table")).s;
    tables.push_back(std::move(tj));
  }
  json out{{"n", 2}, {"count", tables.size()}, {"tables", std::move(tables)}};
  out["config"] = config;
  return out;
}

json run_classify(const Options& o, const json& config) {
  const auto classes = classify_contexts(o.n);
  json arr = json::array();
  std::size_t total = 0, negatives = 0;
  for (const auto& c : classes) {
    arr.push_back(io::to_json(c));
    total += c.orbit_size;
    if (c.negative) negatives += c.orbit_size;
  }
  json out{{"n", o.n}, {"classes", std::move(arr)}, {"total", total}, {"negatives", negatives}};
  out["config"] = config;
  return out;
}

void dispatch(const std::string& sub, const Options& o, std::ostream& os, std::ostream& err) {
  const json config = config_json(sub, o);
  if (sub == "enumerate") {
    const auto contexts = enumerate_contexts(o.n);
    if (o.format == "csv") {
      err << "# config " << config.dump() << '\n';
      io::write_contexts_csv(os, contexts);
      return;
    }
    json arr = json::array();
    std::size_t neg = 0;
    for (const auto& c : contexts) {
      arr.push_back(io::to_json(c));
      neg += c.negative();
    }
    emit_json(os, {{"n", o.n}, {"count", contexts.size()}, {"negatives", neg},
                   {"contexts", std::move(arr)}}, config);
  } else if (sub == "counts" || sub == "report") {
    const auto rows = report_scaling(o.n_max, o.verify_max);
    if (o.format == "csv") {
      err << "# config " << config.dump() << '\n';
      if (sub == "counts") io::write_counts_csv(os, rows); else io::write_fig1_csv(os, rows);
      return;
    }
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(io::to_json(r));
    json out{{"rows", std::move(arr)}};
    if (sub == "report" && o.n_max >= 4) out["limit_check"] = io::to_json(epsilon_limit_check(o.n_max));
    emit_json(os, std::move(out), config);
  } else if (sub == "bound") {
    const json report = run_bound(o, config);
    os << report.dump(2) << '\n';
    if (report.value("falsified", false)) {
      throw BoundFalsifiedError("found a model satisfying " + report["s"].dump() +
                                " predictions, more than the counting bound S = " +
                                report["counting_s"].dump());
    }
  } else if (sub == "inequality") {
    emit_json(os, io::to_json(inequality_by_name(o.name, o.n)), config);
  } else if (sub == "tables") {
    os << run_tables(config).dump(2) << '\n';
  } else if (sub == "classify") {
    os << run_classify(o, config).dump(2) << '\n';
  } else if (sub == "simulate") {
    const Inequality ineq = inequality_by_name(o.name, o.n);
    const QuantumState state = random_state(ineq.n(), parse_state_kind(o.state), o.seed);
    const auto r = run_experiment(state, ineq, NoiseModel{o.flip_p}, o.shots, o.seed, o.bound_shift);
    emit_json(os, io::to_json(r), config);
  } else if (sub == "scan") {
    const Inequality ineq = inequality_by_name(o.name, o.n);
    const QuantumState state = random_state(ineq.n(), parse_state_kind(o.state), o.seed);
    const auto grid = parse_grid(o.grid);
    const auto scan = threshold_scan(state, ineq, grid, o.shots, o.seed);
    if (o.format == "csv") {
      err << "# config " << config.dump() << '\n';
      if (scan.crossing_eps) err << "# crossing eps_corr " << io::format_double(*scan.crossing_eps) << '\n';
      io::write_scan_csv(os, scan);
      return;
    }
    emit_json(os, io::to_json(scan), config);
  }
}

}  // namespace

std::vector<double> parse_grid(std::string_view spec) {
  std::array<double, 3> v{};
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? spec.find(':', start) : spec.size();
    if (end == std::string_view::npos) {
      throw std::invalid_argument("grid must look like a:b:step");
    }
    const auto part = spec.substr(start, end - start);
    const auto res = std::from_chars(part.data(), part.data() + part.size(), v[i]);
    if (res.ec != std::errc() || res.ptr != part.data() + part.size()) {
      throw std::invalid_argument("bad number '" + std::string(part) + "' in grid");
    }
    start = end + 1;
  }
  const auto [a, b, step] = v;
  if (!(step > 0.0) || b < a) throw std::invalid_argument("grid needs a <= b and step > 0");
  const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
  if (count > 100000) throw std::invalid_argument("grid has too many points");
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(a + static_cast<double>(i) * step);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"State-independent contextuality inequalities over n-qubit Pauli observables",
               "contextium"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "Write output to this file instead of stdout");
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed")->envname(kSeedEnv)->capture_default_str();
  };
  auto add_name = [&](CLI::App* sub) {
    sub->add_option("--name", o.name, "Inequality: pm, table2, two-qubit-15 or full")
        ->check(CLI::IsMember(kInequalityNames))
        ->capture_default_str();
  };
  std::map<std::string, std::string> default_format;

  auto* enumerate = app.add_subcommand("enumerate", "List every context on n qubits");
  enumerate->add_option("--n", o.n, "Qubit count")->required();
  default_format["enumerate"] = "json";

  auto* counts = app.add_subcommand("counts", "Context and negative-context counts");
  counts->add_option("--n-max", o.n_max, "Largest n")->capture_default_str();
  counts->add_option("--verify-max", o.verify_max, "Re-count by enumeration up to this n (<= 6)")
      ->capture_default_str();
  default_format["counts"] = "csv";

  auto* bound = app.add_subcommand("bound", "Noncontextual bound of an inequality");
  bound->add_option("--n", o.n, "Qubit count")->capture_default_str();
  add_name(bound);
  bound->add_option("--method", o.method, "exact, bnb or local")
      ->check(CLI::IsMember({"exact", "bnb", "local"}))
      ->capture_default_str();
  bound->add_option("--restarts", o.restarts, "Local-search restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bound->add_option("--max-flips", o.max_flips, "Flips per restart (0: 20 N)")
      ->check(CLI::NonNegativeNumber);
  bound->add_option("--noise", o.noise, "Random-walk probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  bound->add_option("--node-budget", o.node_budget, "Branch-and-bound node budget")
      ->capture_default_str();
  add_seed(bound);

  auto* inequality = app.add_subcommand("inequality", "Export an inequality");
  inequality->add_option("--n", o.n, "Qubit count (for --name full)")->capture_default_str();
  add_name(inequality);

  app.add_subcommand("tables", "The ten two-qubit KS tables");

  auto* classify = app.add_subcommand("classify", "Symmetry classes of the n = 3 contexts");
  classify->add_option("--n", o.n, "Qubit count")->default_val(3);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo sequential-measurement experiment");
  auto* scan = app.add_subcommand("scan", "Violation versus readout error");
  for (auto* sub : {simulate, scan}) {
    sub->add_option("--n", o.n, "Qubit count")->capture_default_str();
    add_name(sub);
    sub->add_option("--state", o.state, "pure, mixed or basis")
        ->check(CLI::IsMember({"pure", "mixed", "basis"}))
        ->capture_default_str();
    sub->add_option("--shots", o.shots, "Runs per context")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_seed(sub);
  }
  simulate->add_option("--flip-p", o.flip_p, "Readout flip probability")
      ->check(CLI::Range(0.0, 0.5))
      ->capture_default_str();
  simulate->add_option("--bound-shift", o.bound_shift, "Aggregate compatibility correction N*phi")
      ->capture_default_str();
  scan->add_option("--flip-p-grid", o.grid, "a:b:step over flip_p")
      ->check(CLI::Validator(
          [](std::string& s) -> std::string {
            try {
              for (double p : parse_grid(s)) {
                if (p < 0.0 || p > 0.5) return "flip_p values must lie in [0, 0.5]";
              }
            } catch (const std::exception& e) {
              return e.what();
            }
            return {};
          },
          "GRID"))
      ->capture_default_str();
  default_format["scan"] = "csv";

  auto* report = app.add_subcommand("report", "Scaling of tolerated error and degree of violation");
  report->add_option("--n-max", o.n_max, "Largest n")->default_val(10);
  report->add_option("--verify-max", o.verify_max, "Re-count by enumeration up to this n (<= 6)")
      ->capture_default_str();
  default_format["report"] = "csv";

  for (auto* sub : app.get_subcommands({})) {
    add_out(sub);
    const auto it = default_format.find(sub->get_name());
    if (it != default_format.end()) {
      sub->add_option("--format", o.format, "json or csv")
          ->check(CLI::IsMember({"json", "csv"}))
          ->default_str(it->second);
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string sub = chosen->get_name();
  if (o.format.empty()) {
    const auto it = default_format.find(sub);
    o.format = it != default_format.end() ? it->second : "json";
  }

  try {
    if (o.out_path.empty()) {
      dispatch(sub, o, out, err);
    } else {
      std::ostringstream buffer;
      dispatch(sub, o, buffer, err);
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + o.out_path + " for writing");
      file << buffer.str();
      if (!file) throw std::runtime_error("failed writing " + o.out_path);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace contextium::cli
