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

#include <cctype>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "umat/brute_oracle.hpp"
#include "umat/coloring.hpp"
#include "umat/errors.hpp"
#include "umat/feasible_query.hpp"
#include "umat/matroid.hpp"
#include "umat/rational.hpp"
#include "umat/uncertainty.hpp"

// JSON encoding of instances and results. Rationals are written as strings
// "p/q" (or "p" for integers) and accepted as JSON integers or such strings.

namespace umat::io {

using nlohmann::json;

namespace detail {

inline bool is_unbounded_token(const json& j) {
  if (j.is_null()) return true;
  if (!j.is_string()) return false;
  std::string s = j.get<std::string>();
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s == "inf" || s == "-inf" || s == "+inf" || s == "infinity" || s == "-infinity" ||
         s == "+infinity";
}

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(where + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

inline std::size_t parse_count(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw InputError(where + ": expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

inline bool parse_bool(const json& j, const std::string& where) {
  if (!j.is_boolean()) throw InputError(where + ": expected true or false");
  return j.get<bool>();
}

}  // namespace detail

inline Rational parse_rational(const json& j, const std::string& where) {
  if (detail::is_unbounded_token(j)) {
    throw InputError(where + ": unbounded area endpoints are not supported");
  }
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(j.get<unsigned long long>())
                                  : Rational(j.get<long long>());
  }
  if (j.is_string()) {
    try {
      return umat::parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected an integer or a \"p/q\" string");
}

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const ElemSet& s) {
  json out = json::array();
  for (Element e : s) out.push_back(e);
  return out;
}

inline json to_json(const std::vector<ElemSet>& family) {
  json out = json::array();
  for (const auto& s : family) out.push_back(to_json(s));
  return out;
}

inline Area parse_area(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": area must be a nonempty list of pieces");
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& p = j[i];
    if (p.is_object() && p.contains("point")) {
      pieces.push_back(Piece::point(parse_rational(p.at("point"), at + ".point")));
    } else if (p.is_object() && p.contains("interval")) {
      const json& iv = p.at("interval");
      const std::string ia = at + ".interval";
      pieces.push_back(Piece::interval(
          parse_rational(detail::field(iv, "lo", ia), ia + ".lo"),
          parse_rational(detail::field(iv, "hi", ia), ia + ".hi"),
          detail::parse_bool(detail::field(iv, "lo_closed", ia), ia + ".lo_closed"),
          detail::parse_bool(detail::field(iv, "hi_closed", ia), ia + ".hi_closed")));
    } else {
      throw InputError(at + ": piece must be {\"point\": R} or {\"interval\": {...}}");
    }
  }
  try {
    return Area(std::move(pieces));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

inline json to_json(const Area& a) {
  json out = json::array();
  for (const auto& p : a.pieces()) {
    if (p.is_point()) {
      out.push_back({{"point", to_json(p.lo)}});
    } else {
      out.push_back({{"interval",
                      {{"lo", to_json(p.lo)},
                       {"hi", to_json(p.hi)},
                       {"lo_closed", p.lo_closed},
                       {"hi_closed", p.hi_closed}}}});
    }
  }
  return out;
}

inline Matroid parse_matroid(const json& j) {
  const std::string where = "matroid";
  const json& type = detail::field(j, "type", where);
  if (!type.is_string()) throw InputError("matroid.type: expected a string");
  const std::string t = type.get<std::string>();
  try {
    if (t == "graphic") {
      std::size_t vertices = detail::parse_count(detail::field(j, "vertices", where), "matroid.vertices");
      const json& edges = detail::field(j, "edges", where);
      if (!edges.is_array()) throw InputError("matroid.edges: expected a list of [u, v] pairs");
      std::vector<std::pair<std::size_t, std::size_t>> list;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string at = "matroid.edges[" + std::to_string(i) + "]";
        if (!edges[i].is_array() || edges[i].size() != 2) throw InputError(at + ": expected [u, v]");
        list.emplace_back(detail::parse_count(edges[i][0], at), detail::parse_count(edges[i][1], at));
      }
      return Matroid::graphic(vertices, std::move(list));
    }
    if (t == "uniform") {
      return Matroid::uniform(detail::parse_count(detail::field(j, "n", where), "matroid.n"),
                              detail::parse_count(detail::field(j, "rank", where), "matroid.rank"));
    }
    if (t == "bases") {
      std::size_t n = detail::parse_count(detail::field(j, "n", where), "matroid.n");
      const json& bases = detail::field(j, "bases", where);
      if (!bases.is_array()) throw InputError("matroid.bases: expected a list of element lists");
      std::vector<std::vector<Element>> list;
      for (std::size_t i = 0; i < bases.size(); ++i) {
        const std::string at = "matroid.bases[" + std::to_string(i) + "]";
        if (!bases[i].is_array()) throw InputError(at + ": expected a list of elements");
        std::vector<Element> b;
        for (const auto& e : bases[i]) b.push_back(detail::parse_count(e, at));
        list.push_back(std::move(b));
      }
      return Matroid::from_bases(n, list);
    }
  } catch (const InputError& e) {
    std::string msg = e.what();
    if (msg.rfind("matroid", 0) == 0) throw;
    throw InputError("matroid: " + msg);
  }
  throw InputError("matroid.type: unknown type \"" + t + "\" (expected graphic, uniform or bases)");
}

inline json to_json(const Matroid& m) {
  return std::visit(
      [&](const auto& k) -> json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, kinds::Graphic>) {
          json edges = json::array();
          for (const auto& [a, b] : k.edges) edges.push_back({a, b});
          return {{"type", "graphic"}, {"vertices", k.vertices}, {"edges", edges}};
        } else if constexpr (std::is_same_v<K, kinds::Uniform>) {
          return {{"type", "uniform"}, {"n", m.universe()}, {"rank", k.rank}};
        } else if constexpr (std::is_same_v<K, kinds::Explicit>) {
          return {{"type", "bases"}, {"n", m.universe()}, {"bases", to_json(k.bases)}};
        } else {
          throw ContractViolation("dual and minor matroids have no file encoding");
        }
      },
      m.repr());
}

inline UncertaintyMatroid parse_instance(const json& j) {
  if (!j.is_object()) throw InputError("instance: expected a JSON object");
  Matroid m = parse_matroid(detail::field(j, "matroid", "instance"));
  const json& areas = detail::field(j, "areas", "instance");
  if (!areas.is_array()) throw InputError("areas: expected a list of areas");
  if (areas.size() != m.universe()) {
    throw InputError("areas: got " + std::to_string(areas.size()) + " areas for " +
                     std::to_string(m.universe()) + " elements");
  }
  std::vector<Area> parsed;
  for (std::size_t i = 0; i < areas.size(); ++i) {
    parsed.push_back(parse_area(areas[i], "areas[" + std::to_string(i) + "]"));
  }
  std::optional<std::vector<Rational>> costs;
  if (j.contains("costs") && !j.at("costs").is_null()) {
    const json& c = j.at("costs");
    if (!c.is_array()) throw InputError("costs: expected a list of rationals");
    if (c.size() != m.universe()) {
      throw InputError("costs: got " + std::to_string(c.size()) + " costs for " +
                       std::to_string(m.universe()) + " elements");
    }
    costs.emplace();
    for (std::size_t i = 0; i < c.size(); ++i) {
      costs->push_back(parse_rational(c[i], "costs[" + std::to_string(i) + "]"));
    }
  }
  return UncertaintyMatroid(std::move(m), std::move(parsed), std::move(costs));
}

inline UncertaintyMatroid parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_instance(j);
}

inline UncertaintyMatroid load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read instance file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

inline json to_json(const UncertaintyMatroid& u) {
  json areas = json::array();
  for (const auto& a : u.areas()) areas.push_back(to_json(a));
  json out = {{"matroid", to_json(u.matroid())}, {"areas", areas}};
  if (u.has_costs()) {
    json costs = json::array();
    for (const auto& c : *u.costs()) costs.push_back(to_json(c));
    out["costs"] = costs;
  }
  return out;
}

inline json to_json(const Coloring& c) {
  json out = json::array();
  for (Element e = 0; e < c.colors.size(); ++e) {
    const auto& col = c.colors[e];
    out.push_back({{"blue", col.blue}, {"red", col.red}, {"certain", col.certain}});
  }
  return out;
}

inline json to_json(const WitnessStructure& ws) {
  return {{"core", to_json(ws.core)}, {"cliques", to_json(ws.cliques)}};
}

inline json to_json(const BruteReport& r) {
  json per = json::array();
  for (const auto& opt : r.per_realization) {
    json w = json::array();
    for (Element e : r.colors.ground) w.push_back(to_json(opt.weights[e]));
    per.push_back({{"weights", w}, {"min_bases", to_json(opt.min_bases)}});
  }
  json colors = json::array();
  for (Element e = 0; e < r.colors.colors.size(); ++e) {
    colors.push_back({{"blue", r.colors[e].blue}, {"red", r.colors[e].red}});
  }
  return {{"bases", to_json(r.bases)},
          {"per_realization", per},
          {"uob_family", to_json(r.uob_family)},
          {"colors", colors},
          {"minimal_feasible", to_json(r.minimal_feasible)}};
}

// Comma-separated element indices, e.g. "0,2,5"; empty text is the empty set.
inline ElemSet parse_element_list(const std::string& text, std::size_t universe) {
  ElemSet s(universe);
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("--set: malformed element index '" + item + "'");
    }
    std::size_t e = std::stoul(item);
    if (e >= universe) {
      throw InputError("--set: element " + item + " out of range for " + std::to_string(universe) +
                       " elements");
    }
    s.insert(e);
  }
  return s;
}

}  // namespace umat::io
