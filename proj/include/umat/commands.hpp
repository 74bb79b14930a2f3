// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "umat/brute_oracle.hpp"
#include "umat/coloring.hpp"
#include "umat/feasible_query.hpp"
#include "umat/io.hpp"
#include "umat/uncertainty.hpp"
#include "umat/uob.hpp"

namespace umat {

enum ExitCode : int { kOk = 0, kInputError = 1, kMismatch = 2 };

struct CommandOptions {
  std::string method = "structural";  // uob: structural | regret
  std::size_t limit = 7;              // verify: element cap for enumeration
  std::optional<std::string> set;     // feasible: comma-separated elements
};

struct CommandResult {
  int exit_code = kOk;
  nlohmann::json output;
  std::string error;
};

namespace detail {

using nlohmann::json;

inline CommandResult uob_command(const UncertaintyMatroid& u, const CommandOptions& opts) {
  if (opts.method != "structural" && opts.method != "regret") {
    throw InputError("--method: expected structural or regret, got '" + opts.method + "'");
  }
  auto structural = find_uob_structural(u);
  auto regret = find_uob_regret(u);
  if (structural.has_value() != regret.has_value()) {
    return {kMismatch, json{{"exists", structural.has_value()}, {"method", opts.method}},
            "structural and regret finders disagree on existence"};
  }
  const auto& chosen = opts.method == "structural" ? structural : regret;
  json out = {{"exists", chosen.has_value()}, {"method", opts.method}};
  if (chosen) out["basis"] = io::to_json(*chosen);
  return {kOk, out, {}};
}

// Areas replaced by their endpoints {L, U}: same bounds and certainty, so
// the same colors and the same uniformly optimal bases, but enumerable.
inline UncertaintyMatroid endpoint_instance(const UncertaintyMatroid& u) {
  std::vector<Area> areas;
  for (const auto& a : u.areas()) {
    areas.push_back(a.is_finite() ? a : Area::points({a.lower(), a.upper()}));
  }
  return u.with_areas(std::move(areas));
}

inline std::vector<ElemSet> subsets_of(const ElemSet& s) {
  std::vector<Element> members = s.members();
  std::vector<ElemSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << members.size()); ++mask) {
    ElemSet x(s.universe());
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (mask >> i & 1) x.insert(members[i]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

inline CommandResult verify_command(const UncertaintyMatroid& u, const CommandOptions& opts) {
  BruteOptions bo;
  bo.max_elements = opts.limit;
  if (u.ground().size() > bo.max_elements) {
    throw UnsupportedInstance("verify: instance has " + std::to_string(u.ground().size()) +
                              " elements, above --limit " + std::to_string(bo.max_elements));
  }
  bool finite = true;
  for (Element e : u.ground()) finite = finite && u.area(e).is_finite();
  const UncertaintyMatroid target = finite ? u : endpoint_instance(u);
  BruteEngine engine(target, bo);

  Coloring fast_colors = color_all(u);
  Coloring brute_colors = engine.colors();
  bool colors_ok = true;
  for (Element e : u.ground()) {
    colors_ok = colors_ok && fast_colors[e].blue == brute_colors[e].blue &&
                fast_colors[e].red == brute_colors[e].red;
  }

  std::vector<ElemSet> family = engine.uob_family();
  bool uob_ok = exists_uob(u, fast_colors) == !family.empty();
  for (const auto& b : engine.bases()) {
    bool member = std::find(family.begin(), family.end(), b) != family.end();
    uob_ok = uob_ok && is_uob(u, b) == member;
  }
  auto structural = find_uob_structural(u);
  auto regret = find_uob_regret(u);
  uob_ok = uob_ok && structural.has_value() == !family.empty() &&
           regret.has_value() == !family.empty();
  if (structural) uob_ok = uob_ok && std::find(family.begin(), family.end(), *structural) != family.end();
  if (regret) uob_ok = uob_ok && std::find(family.begin(), family.end(), *regret) != family.end();

  WitnessStructure ws = compute_witness_structure(u);
  bool feasible_ok = true;
  bool witness_ok = true;
  bool delegated = false;
  json minimal = nullptr;
  bool minimal_ok = true;
  if (finite) {
    std::vector<ElemSet> all = subsets_of(u.ground());
    for (const auto& x : all) {
      bool brute = engine.is_feasible(x);
      feasible_ok = feasible_ok && is_feasible(ws, x) == brute;
      bool brute_witness = !engine.is_feasible(u.ground() - x);
      witness_ok = witness_ok && is_witness_set(u, x) == brute_witness;
    }
    std::vector<ElemSet> brute_min = engine.minimal_feasible();
    minimal_ok = minimal_feasible_queries(ws) == brute_min;
    minimal = io::to_json(brute_min);
  } else {
    // Only subsets of the point-area elements can be revealed exhaustively.
    ElemSet revealable(u.universe());
    for (Element e : u.ground()) {
      if (u.area(e).is_finite()) revealable.insert(e);
    }
    for (const auto& x : subsets_of(revealable)) {
      BruteFeasibility bf = brute_feasibility(u, x, bo);
      delegated = delegated || bf.delegated;
      feasible_ok = feasible_ok && is_feasible(ws, x) == bf.feasible;
    }
  }

  BruteReport rep;
  rep.bases = engine.bases();
  for (std::size_t r = 0; finite && r < engine.realization_count(); ++r) {
    rep.per_realization.push_back({engine.weights(r), engine.min_bases(r)});
  }
  rep.uob_family = family;
  rep.colors = brute_colors;
  json report = io::to_json(rep);
  report["minimal_feasible"] = minimal;
  report["delegated"] = delegated;
  report["endpoint_substitution"] = !finite;

  json checks = {{"colors", colors_ok},
                 {"uob", uob_ok},
                 {"feasible", feasible_ok},
                 {"witness", witness_ok},
                 {"minimal_feasible", minimal_ok}};
  bool pass = colors_ok && uob_ok && feasible_ok && witness_ok && minimal_ok;
  json out = {{"report", report}, {"checks", checks}, {"pass", pass}};
  if (!pass) return {kMismatch, out, "fast paths disagree with exhaustive enumeration"};
  return {kOk, out, {}};
}

}  // namespace detail

// Runs one command on a parsed instance. Input problems surface as
// exceptions; run_command_file turns them into exit code 1.
inline CommandResult run_command(const std::string& command, const UncertaintyMatroid& u,
                                 const CommandOptions& opts = {}) {
  using nlohmann::json;
  if (command == "color") return {kOk, io::to_json(color_all(u)), {}};
  if (command == "uob") return detail::uob_command(u, opts);
  if (command == "core") return {kOk, json{{"core", io::to_json(compute_witness_structure(u).core)}}, {}};
  if (command == "witgraph") return {kOk, io::to_json(compute_witness_structure(u)), {}};
  if (command == "mcfq") {
    CostedQuery q = min_cost_feasible_query(u);
    return {kOk, json{{"query", io::to_json(q.query)}, {"cost", io::to_json(q.cost)}}, {}};
  }
  if (command == "feasible") {
    if (!opts.set) throw InputError("feasible: --set is required");
    ElemSet x = io::parse_element_list(*opts.set, u.universe());
    WitnessStructure ws = compute_witness_structure(u);
    return {kOk, json{{"feasible", is_feasible(ws, x)}, {"minimal", is_minimal_feasible(ws, x)}}, {}};
  }
  if (command == "verify") return detail::verify_command(u, opts);
  throw InputError("unknown command '" + command + "'");
}

inline CommandResult run_command_file(const std::string& command, const std::string& path,
                                      const CommandOptions& opts = {}) {
  try {
    return run_command(command, io::load_instance(path), opts);
  } catch (const std::exception& e) {
    return {kInputError, nullptr, e.what()};
  }
}

}  // namespace umat
