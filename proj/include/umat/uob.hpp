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
#include <optional>
#include <vector>

#include "umat/coloring.hpp"
#include "umat/elem_set.hpp"
#include "umat/errors.hpp"
#include "umat/matroid.hpp"
#include "umat/uncertainty.hpp"

namespace umat {

// The certain weighted matroid: blue uncertain elements contracted, red
// uncertain elements deleted, remaining (certain) elements at their values.
struct CertainCore {
  ElemSet blue_uncertain;
  ElemSet red_uncertain;
  Matroid certain_matroid;
  std::vector<Rational> certain_weights;  // indexed by element
};

inline bool exists_uob(const UncertaintyMatroid&, const Coloring& coloring) {
  return coloring.uncolored_uncertain().empty();
}

// A uniformly optimal basis exists iff every uncertain element is colored.
inline bool exists_uob(const UncertaintyMatroid& u) { return exists_uob(u, color_all(u)); }

inline CertainCore certain_weighted_matroid(const UncertaintyMatroid& u, const Coloring& coloring) {
  if (!exists_uob(u, coloring)) {
    throw ContractViolation("certain weighted matroid requested but no uniformly optimal basis exists");
  }
  ElemSet blue = coloring.blue_uncertain();
  ElemSet red = coloring.red_uncertain();
  std::vector<Rational> weights;
  weights.reserve(u.universe());
  for (Element e = 0; e < u.universe(); ++e) weights.push_back(u.lower(e));
  return CertainCore{blue, red, contract_delete(u.matroid(), blue, red), std::move(weights)};
}

inline CertainCore certain_weighted_matroid(const UncertaintyMatroid& u) {
  return certain_weighted_matroid(u, color_all(u));
}

// Blue uncertain elements plus a greedy minimum basis of the certain
// weighted matroid; nullopt when no uniformly optimal basis exists.
inline std::optional<ElemSet> find_uob_structural(const UncertaintyMatroid& u) {
  Coloring coloring = color_all(u);
  if (!exists_uob(u, coloring)) return std::nullopt;
  CertainCore core = certain_weighted_matroid(u, coloring);
  return core.blue_uncertain | greedy_min_basis(core.certain_matroid, core.certain_weights);
}

// Two greedy passes over the closed hulls of the areas: midpoints first,
// then the candidate's elements pushed to their upper bounds and everything
// else to its lower bound. The candidate survives iff no basis beats it
// under that adversarial realization.
inline std::optional<ElemSet> find_uob_regret(const UncertaintyMatroid& u) {
  const Matroid& m = u.matroid();
  std::vector<Rational> mid;
  mid.reserve(u.universe());
  for (Element e = 0; e < u.universe(); ++e) mid.push_back(midpoint(u.lower(e), u.upper(e)));
  ElemSet candidate = greedy_min_basis(m, mid);

  std::vector<Rational> adversarial;
  adversarial.reserve(u.universe());
  for (Element e = 0; e < u.universe(); ++e) {
    adversarial.push_back(candidate.contains(e) ? u.upper(e) : u.lower(e));
  }
  ElemSet rival = greedy_min_basis(m, adversarial);
  if (weight(rival, adversarial) < weight(candidate, adversarial)) return std::nullopt;
  return candidate;
}

inline bool is_uob(const UncertaintyMatroid& u, const ElemSet& t) {
  Coloring coloring = color_all(u);
  if (!exists_uob(u, coloring)) return false;
  if (!t.is_subset_of(u.ground()) || !is_basis(u.matroid(), t)) return false;
  CertainCore core = certain_weighted_matroid(u, coloring);
  if (!core.blue_uncertain.is_subset_of(t) || t.intersects(core.red_uncertain)) return false;
  ElemSet rest = t - core.blue_uncertain;
  if (!is_basis(core.certain_matroid, rest)) return false;
  ElemSet best = greedy_min_basis(core.certain_matroid, core.certain_weights);
  return weight(rest, core.certain_weights) == weight(best, core.certain_weights);
}

// Weight levels of the uniformly-optimal-basis matroid. levels[0] is a
// synthetic weight below every certain weight and carries the blue uncertain
// elements; layer_sets[i] holds the elements at levels[i]; prefixes[i] is the
// union of layer_sets[0..i].
struct UobLayering {
  std::vector<Rational> levels;
  std::vector<ElemSet> layer_sets;
  std::vector<ElemSet> prefixes;
  ElemSet red_uncertain;
};

inline UobLayering uob_layering(const UncertaintyMatroid& u) {
  Coloring coloring = color_all(u);
  CertainCore core = certain_weighted_matroid(u, coloring);

  std::vector<Rational> certain_levels;
  for (Element e : core.certain_matroid.ground()) certain_levels.push_back(u.lower(e));
  std::sort(certain_levels.begin(), certain_levels.end());
  certain_levels.erase(std::unique(certain_levels.begin(), certain_levels.end()),
                       certain_levels.end());

  UobLayering out;
  out.red_uncertain = core.red_uncertain;
  out.levels.push_back(certain_levels.empty() ? Rational(0) : certain_levels.front() - 1);
  out.levels.insert(out.levels.end(), certain_levels.begin(), certain_levels.end());
  out.layer_sets.push_back(core.blue_uncertain);
  for (std::size_t i = 1; i < out.levels.size(); ++i) {
    ElemSet layer(u.universe());
    for (Element e : core.certain_matroid.ground()) {
      if (u.lower(e) == out.levels[i]) layer.insert(e);
    }
    out.layer_sets.push_back(std::move(layer));
  }
  ElemSet acc(u.universe());
  for (const auto& layer : out.layer_sets) {
    acc |= layer;
    out.prefixes.push_back(acc);
  }
  return out;
}

// Independence oracle of the matroid whose bases are exactly the uniformly
// optimal bases: the direct sum over layers i of M / F_{i-1} restricted to
// layer i.
class UobMatroid {
 public:
  explicit UobMatroid(const UncertaintyMatroid& u) : layering_(uob_layering(u)) {
    const Matroid& m = u.matroid();
    ElemSet previous(u.universe());
    for (std::size_t i = 0; i < layering_.layer_sets.size(); ++i) {
      layers_.push_back(contract_delete(m, previous, m.ground() - layering_.prefixes[i]));
      previous = layering_.prefixes[i];
    }
  }

  const UobLayering& layering() const { return layering_; }

  bool is_independent(const ElemSet& x) const {
    if (x.intersects(layering_.red_uncertain)) {
      throw ContractViolation("set " + x.to_string() + " contains red uncertain elements " +
                              (x & layering_.red_uncertain).to_string());
    }
    if (!x.is_subset_of(layering_.prefixes.back())) return false;
    for (std::size_t i = 0; i < layers_.size(); ++i) {
      if (!layers_[i].is_independent(x & layering_.layer_sets[i])) return false;
    }
    return true;
  }

 private:
  UobLayering layering_;
  std::vector<Matroid> layers_;
};

inline bool uob_matroid_independent(const UncertaintyMatroid& u, const ElemSet& x) {
  return UobMatroid(u).is_independent(x);
}

}  // namespace umat
