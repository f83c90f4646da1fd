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

#include "contextium/io.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

#include "contextium/errors.hpp"

namespace contextium::io {

namespace {

json member_list(const Context& c) {
  return json::array({c[0].str(), c[1].str(), c[2].str()});
}

}  // namespace

json to_json(const Context& c) { return {{"members", member_list(c)}, {"sign", c.sign()}}; }

Context context_from_json(const json& j) {
  const auto& m = j.at("members");
  if (!m.is_array() || m.size() != 3) throw InvariantError("context needs exactly 3 members");
  Context c = Context::make(PauliString::parse(m[0].get<std::string>()),
                            PauliString::parse(m[1].get<std::string>()),
                            PauliString::parse(m[2].get<std::string>()));
  if (j.contains("sign") && j.at("sign").get<int>() != c.sign()) {
    throw InvariantError("recorded sign disagrees with operator product");
  }
  return c;
}

json to_json(const Inequality& ineq) {
  json terms = json::array();
  for (const auto& t : ineq.terms()) {
    terms.push_back({{"context", to_json(t.context)}, {"coeff", t.coeff}});
  }
  return {{"n", ineq.n()},
          {"name", ineq.name()},
          {"terms", std::move(terms)},
          {"bound", ineq.bound()},
          {"quantum_value", ineq.quantum_value()}};
}

Inequality inequality_from_json(const json& j) {
  std::vector<Context> contexts;
  for (const auto& t : j.at("terms")) {
    Context c = context_from_json(t.at("context"));
    if (t.contains("coeff") && t.at("coeff").get<int>() != c.sign()) {
      throw InvariantError("term coefficient must equal its context sign");
    }
    contexts.push_back(std::move(c));
  }
  Inequality ineq(j.at("n").get<int>(), std::move(contexts), j.at("bound").get<std::int64_t>(),
                  j.value("name", std::string("custom")));
  if (j.contains("quantum_value") &&
      j.at("quantum_value").get<std::int64_t>() != ineq.quantum_value()) {
    throw InvariantError("quantum_value must equal the number of terms");
  }
  return ineq;
}

json to_json(const Assignment& a) {
  json out = json::object();
  for (const auto& [p, v] : a.values()) out[p.str()] = v;
  return out;
}

json to_json(const SolveReport& r) {
  json out{{"s", r.s},
           {"N", r.num_terms},
           {"bound", r.bound()},
           {"optimal", r.optimal},
           {"method", std::string(to_string(r.method))},
           {"effort", r.effort},
           {"witness", to_json(r.witness)}};
  if (r.local_search) {
    out["seed"] = r.local_search->seed;
    out["restarts"] = r.local_search->restarts;
    out["max_flips"] = r.local_search->max_flips;
    out["noise"] = r.local_search->noise;
    out["best_restart"] = r.best_restart;
  }
  return out;
}

json to_json(const BoundReport& r) {
  json out{{"bound", r.bound}, {"s", r.s}, {"optimal", r.optimal}, {"source", r.source}};
  if (r.search) out["search"] = to_json(*r.search);
  return out;
}

json to_json(const KSTable& t) {
  json grid = json::array();
  for (const auto& row : t.grid()) {
    grid.push_back(json::array({row[0].str(), row[1].str(), row[2].str()}));
  }
  json rows = json::array(), cols = json::array();
  for (const auto& c : t.rows()) rows.push_back(to_json(c));
  for (const auto& c : t.cols()) cols.push_back(to_json(c));
  return {{"grid", std::move(grid)},
          {"rows", std::move(rows)},
          {"cols", std::move(cols)},
          {"negative_lines", t.negative_lines()},
          {"no_model", t.admits_no_model()}};
}

json to_json(const ParityWitness& w) {
  return {{"sign_product", w.sign_product},
          {"negative_lines", w.negative_lines},
          {"no_model", w.no_model},
          {"max_satisfiable", w.max_satisfiable},
          {"unsatisfied_line", w.unsatisfied_line},
          {"model", to_json(w.model)}};
}

json to_json(const SymmetryClass& c) {
  return {{"label", c.label},
          {"orbit_size", c.orbit_size},
          {"representative", to_json(c.representative)},
          {"negative", c.negative}};
}

json to_json(const ScalingRow& r) {
  return {{"n", r.n},
          {"N", r.total},
          {"negatives", r.negative},
          {"S", r.positive},
          {"b", r.bound},
          {"epsilon", r.epsilon.str()},
          {"epsilon_decimal", r.epsilon.decimal(6)},
          {"D", r.degree.str()},
          {"D_decimal", r.degree.decimal(6)},
          {"source", std::string(to_string(r.source))}};
}

json to_json(const LimitCheck& c) {
  return {{"epsilon_increasing", c.epsilon_increasing},
          {"negative_fraction_below_half", c.negative_fraction_below_half},
          {"negative_fraction_increasing", c.negative_fraction_increasing},
          {"degree_increasing", c.degree_increasing},
          {"ok", c.ok()}};
}

json to_json(const ExperimentResult& r) {
  json per = json::array();
  for (const auto& e : r.per_context) {
    per.push_back({{"context", member_list(e.context)},
                   {"sign", e.context.sign()},
                   {"coeff", e.coeff},
                   {"corr", e.corr},
                   {"stderr", e.std_error},
                   {"sign_mismatches", e.sign_mismatches}});
  }
  return {{"n", r.n},
          {"inequality", r.inequality},
          {"chi", r.chi},
          {"chi_stderr", r.chi_stderr},
          {"bound", r.bound},
          {"bound_shift", r.bound_shift},
          {"bound_used", r.bound_used},
          {"violated", r.violated},
          {"shots", r.shots},
          {"flip_p", r.noise.flip_p},
          {"eps_corr", r.noise.eps_corr()},
          {"per_context", std::move(per)},
          {"seed", r.seed}};
}

json to_json(const ThresholdScan& s) {
  json rows = json::array();
  for (const auto& r : s.rows) {
    rows.push_back({{"flip_p", r.flip_p},
                    {"eps_corr", r.eps_corr},
                    {"chi_mean", r.chi},
                    {"chi_stderr", r.chi_stderr},
                    {"violated", r.violated}});
  }
  json out{{"bound", s.bound}, {"N", s.num_terms}, {"rows", std::move(rows)}};
  out["crossing_eps"] = s.crossing_eps ? json(*s.crossing_eps) : json(nullptr);
  return out;
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (res.ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buf.data(), res.ptr);
}

void write_contexts_csv(std::ostream& os, std::span<const Context> contexts) {
  os << "a,b,c,sign\n";
  for (const auto& c : contexts) {
    os << c[0] << ',' << c[1] << ',' << c[2] << ',' << c.sign() << '\n';
  }
}

void write_counts_csv(std::ostream& os, std::span<const ScalingRow> rows) {
  os << "n,N,negatives,S\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.total << ',' << r.negative << ',' << r.positive << '\n';
  }
}

void write_fig1_csv(std::ostream& os, std::span<const ScalingRow> rows) {
  os << "n,epsilon,D\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.epsilon.decimal(6) << ',' << r.degree.decimal(6) << '\n';
  }
}

void write_scan_csv(std::ostream& os, const ThresholdScan& scan) {
  os << "eps_corr,chi_mean,chi_stderr,violated\n";
  for (const auto& r : scan.rows) {
    os << format_double(r.eps_corr) << ',' << format_double(r.chi) << ','
       << format_double(r.chi_stderr) << ',' << (r.violated ? "true" : "false") << '\n';
  }
}

}  // namespace contextium::io
