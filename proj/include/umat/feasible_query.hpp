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

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "umat/elem_set.hpp"
#include "umat/errors.hpp"
#include "umat/matroid.hpp"
#include "umat/uncertainty.hpp"

namespace umat {

// Position of every other element's area relative to the open interval
// (L_e, U_e) of a focus element e.
struct Neighborhood {
  ElemSet low;   // U_f <= L_e
  ElemSet mid;   // A(f) meets (L_e, U_e)
  ElemSet high;  // U_e <= L_f
  ElemSet both;  // outside mid, with members on both sides: <= L_e and >= U_e
};

inline Neighborhood neighborhood(const UncertaintyMatroid& u, Element e) {
  const std::size_t n = u.universe();
  Neighborhood nb{ElemSet(n), ElemSet(n), ElemSet(n), ElemSet(n)};
  const Rational& lo = u.lower(e);
  const Rational& hi = u.upper(e);
  for (Element f : u.ground()) {
    if (f == e) continue;
    const Area& a = u.area(f);
    if (a.upper() <= lo) nb.low.insert(f);
    if (hi <= a.lower()) nb.high.insert(f);
    bool in_mid = a.intersects_open(lo, hi);
    if (in_mid) {
      nb.mid.insert(f);
    } else if (a.has_member_at_most(lo) && a.has_member_at_least(hi)) {
      nb.both.insert(f);
    }
  }
  return nb;
}

// M / low(e) \ high(e).
inline Matroid restricted_matroid(const UncertaintyMatroid& u, const Neighborhood& nb) {
  return contract_delete(u.matroid(), nb.low, nb.high);
}

inline Matroid restricted_matroid(const UncertaintyMatroid& u, Element e) {
  return restricted_matroid(u, neighborhood(u, e));
}

// {e} meets every feasible query: e is uncertain and its component in the
// restricted matroid reaches mid(e).
inline bool in_core(const UncertaintyMatroid& u, Element e) {
  if (u.is_certain(e)) return false;
  Neighborhood nb = neighborhood(u, e);
  if (nb.mid.empty()) return false;
  return component_meets(restricted_matroid(u, nb), e, nb.mid);
}

struct WitnessStructure {
  ElemSet core;
  // Components of the witness graph with at least two members, ordered by
  // smallest element.
  std::vector<ElemSet> cliques;
  // The common two-point area {lower, upper} of each clique.
  std::vector<std::pair<Rational, Rational>> clique_areas;
};

inline WitnessStructure compute_witness_structure(const UncertaintyMatroid& u) {
  WitnessStructure ws{ElemSet(u.universe()), {}, {}};
  for (Element e : u.ground()) {
    if (in_core(u, e)) ws.core.insert(e);
  }

  // Candidates share a two-point area; group on it before any matroid work.
  std::map<std::pair<Rational, Rational>, ElemSet> groups;
  for (Element e : u.ground() - ws.core) {
    if (u.is_certain(e) || !u.area(e).is_two_point()) continue;
    auto key = std::make_pair(u.lower(e), u.upper(e));
    auto it = groups.try_emplace(key, ElemSet(u.universe())).first;
    it->second.insert(e);
  }

  std::vector<std::pair<ElemSet, std::pair<Rational, Rational>>> found;
  for (auto& [key, remaining] : groups) {
    while (!remaining.empty()) {
      Element e = remaining.first();
      ElemSet clique = component_of(restricted_matroid(u, e), e) & remaining;
      remaining -= clique;
      if (clique.size() >= 2) found.emplace_back(std::move(clique), key);
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first.first() < b.first.first(); });
  for (auto& [clique, key] : found) {
    ws.cliques.push_back(std::move(clique));
    ws.clique_areas.push_back(std::move(key));
  }
  return ws;
}

// x meets every feasible query.
inline bool is_witness_set(const UncertaintyMatroid& u, const ElemSet& x) {
  for (Element e : x & u.ground()) {
    if (u.is_certain(e)) continue;
    Neighborhood nb = neighborhood(u, e);
    ElemSet targets = nb.mid | (x & nb.both);
    if (targets.empty()) continue;
    if (component_meets(restricted_matroid(u, nb), e, targets)) return true;
  }
  return false;
}

inline bool is_feasible(const WitnessStructure& ws, const ElemSet& x) {
  if (!ws.core.is_subset_of(x)) return false;
  return std::all_of(ws.cliques.begin(), ws.cliques.end(),
                     [&](const ElemSet& k) { return (k - x).size() <= 1; });
}

// Every revelation of x leaves an instance with a uniformly optimal basis.
inline bool is_feasible(const UncertaintyMatroid& u, const ElemSet& x) {
  return is_feasible(compute_witness_structure(u), x);
}

inline bool is_minimal_feasible(const WitnessStructure& ws, const ElemSet& x) {
  ElemSet allowed = ws.core;
  for (const auto& k : ws.cliques) allowed |= k;
  if (!x.is_subset_of(allowed) || !ws.core.is_subset_of(x)) return false;
  return std::all_of(ws.cliques.begin(), ws.cliques.end(),
                     [&](const ElemSet& k) { return (k - x).size() == 1; });
}

inline bool is_minimal_feasible(const UncertaintyMatroid& u, const ElemSet& x) {
  return is_minimal_feasible(compute_witness_structure(u), x);
}

// All inclusion-minimal feasible queries: the core plus all but one member
// of each clique.
inline std::vector<ElemSet> minimal_feasible_queries(const WitnessStructure& ws) {
  std::vector<ElemSet> out{ws.core};
  for (const auto& k : ws.cliques) {
    std::vector<ElemSet> next;
    next.reserve(out.size() * k.size());
    for (const auto& partial : out) {
      for (Element skip : k) next.push_back(partial | k.without(skip));
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CostedQuery {
  ElemSet query;
  Rational cost;
};

// The core, each clique minus one most expensive member (highest index on
// ties), and every remaining element with negative cost.
inline CostedQuery min_cost_feasible_query(const UncertaintyMatroid& u, const WitnessStructure& ws) {
  if (!u.has_costs()) throw InputError("minimum-cost query needs per-element costs");
  const auto& c = *u.costs();
  ElemSet q = ws.core;
  for (const auto& k : ws.cliques) {
    Element drop = k.first();
    for (Element f : k) {
      if (c[f] >= c[drop]) drop = f;
    }
    q |= k.without(drop);
  }
  for (Element e : u.ground() - q) {
    if (c[e] < 0) q.insert(e);
  }
  return {q, weight(q, c)};
}

inline CostedQuery min_cost_feasible_query(const UncertaintyMatroid& u) {
  if (!u.has_costs()) throw InputError("minimum-cost query needs per-element costs");
  return min_cost_feasible_query(u, compute_witness_structure(u));
}

// Graphic instances with every area {0, 1}: the answer is all but one edge
// of every block, obtained here from the generic witness structure. Unit
// costs are used when the instance carries none.
inline ElemSet mst01_min_queries(const UncertaintyMatroid& u) {
  if (u.matroid().kind() != MatroidKind::graphic) {
    throw ContractViolation("mst01_min_queries needs a graphic matroid");
  }
  const Area zero_one = Area::points({Rational(0), Rational(1)});
  for (Element e : u.ground()) {
    if (!(u.area(e) == zero_one)) {
      throw ContractViolation("element " + std::to_string(e) + " does not have area {0,1}");
    }
  }
  if (u.has_costs()) return min_cost_feasible_query(u).query;
  return min_cost_feasible_query(u.with_costs(std::vector<Rational>(u.universe(), Rational(1)))).query;
}

}  // namespace umat
