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

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "umat/coloring.hpp"
#include "umat/elem_set.hpp"
#include "umat/errors.hpp"
#include "umat/matroid.hpp"
#include "umat/uncertainty.hpp"
#include "umat/uob.hpp"

// Exhaustive ground truth for small instances with finite areas. Everything
// here follows the definitions directly: enumerate bases, enumerate
// realizations, compare weights. Nothing calls the coloring or witness code
// except the documented delegation in brute_feasibility.

namespace umat {

struct BruteOptions {
  std::size_t max_elements = 7;
  std::size_t max_realizations = 200000;
};

// Every basis of m, in ascending lexicographic order of member lists.
inline std::vector<ElemSet> all_bases(const Matroid& m, const BruteOptions& opts = {}) {
  std::vector<Element> ground = m.ground().members();
  if (ground.size() > opts.max_elements || ground.size() >= 63) {
    throw UnsupportedInstance("basis enumeration limited to " +
                              std::to_string(opts.max_elements) + " elements, got " +
                              std::to_string(ground.size()));
  }
  std::vector<ElemSet> independent_max;
  std::size_t best = 0;
  const std::uint64_t subsets = std::uint64_t{1} << ground.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    ElemSet s(m.universe());
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if (mask >> i & 1) s.insert(ground[i]);
    }
    if (s.size() < best || !m.is_independent(s)) continue;
    if (s.size() > best) {
      best = s.size();
      independent_max.clear();
    }
    independent_max.push_back(std::move(s));
  }
  std::sort(independent_max.begin(), independent_max.end());
  return independent_max;
}

struct RealizationOptimum {
  std::vector<Rational> weights;  // indexed by element
  std::vector<ElemSet> min_bases;
};

struct BruteReport {
  std::vector<ElemSet> bases;
  std::vector<RealizationOptimum> per_realization;
  std::vector<ElemSet> uob_family;
  Coloring colors;  // definition-level blue/red; certain mirrors the areas
  std::vector<ElemSet> minimal_feasible;
};

// Precomputed tables for one finite-area instance: its bases, and for every
// realization the set of minimum-weight bases as a bitmask over the basis
// list.
class BruteEngine {
  using Mask = boost::dynamic_bitset<>;

 public:
  explicit BruteEngine(const UncertaintyMatroid& u, const BruteOptions& opts = {})
      : u_(u), ground_(u.ground().members()) {
    for (Element e : ground_) {
      if (!u.area(e).is_finite()) {
        throw UnsupportedInstance("element " + std::to_string(e) +
                                  " has a non-finite area; exhaustive check needs point areas");
      }
    }
    bases_ = all_bases(u.matroid(), opts);
    Realizations r(u);
    if (r.count() > opts.max_realizations) {
      throw UnsupportedInstance(std::to_string(r.count()) + " realizations exceed the limit of " +
                                std::to_string(opts.max_realizations));
    }
    radix_.reserve(ground_.size());
    for (Element e : ground_) radix_.push_back(u.area(e).finite_members().size());
    do {
      const auto& w = r.current();
      Mask best(bases_.size());
      Rational best_weight;
      for (std::size_t b = 0; b < bases_.size(); ++b) {
        Rational total = weight(bases_[b], w);
        if (best.none() || total < best_weight) {
          best.reset();
          best_weight = total;
        }
        if (total == best_weight) best.set(b);
      }
      weights_.push_back(w);
      digits_.push_back(r.digits());
      optimal_.push_back(std::move(best));
    } while (r.advance());
  }

  const std::vector<ElemSet>& bases() const { return bases_; }
  std::size_t realization_count() const { return optimal_.size(); }
  const std::vector<Rational>& weights(std::size_t realization) const { return weights_[realization]; }

  std::vector<ElemSet> min_bases(std::size_t realization) const { return pick(optimal_[realization]); }

  std::vector<ElemSet> uob_family() const {
    Mask all(bases_.size());
    all.set();
    for (const auto& m : optimal_) all &= m;
    return pick(all);
  }

  Coloring colors() const {
    Coloring c;
    c.colors.resize(u_.universe());
    c.ground = u_.ground();
    for (Element e : ground_) {
      Mask holds(bases_.size());
      for (std::size_t b = 0; b < bases_.size(); ++b) holds[b] = bases_[b].contains(e);
      Mask avoids = ~holds;
      bool blue = true, red = true;
      for (const auto& m : optimal_) {
        blue = blue && m.intersects(holds);
        red = red && m.intersects(avoids);
      }
      c.colors[e] = {blue, red, u_.is_certain(e)};
    }
    return c;
  }

  // For each revelation of x (a class of realizations agreeing on x), some
  // basis is optimal in every realization of the class.
  bool is_feasible(const ElemSet& x) const {
    std::vector<std::size_t> positions;
    std::vector<std::size_t> stride;
    std::size_t classes = 1;
    for (std::size_t i = 0; i < ground_.size(); ++i) {
      if (!x.contains(ground_[i])) continue;
      positions.push_back(i);
      stride.push_back(classes);
      classes *= radix_[i];
    }
    Mask full(bases_.size());
    full.set();
    std::vector<Mask> common(classes, full);
    for (std::size_t r = 0; r < optimal_.size(); ++r) {
      std::size_t key = 0;
      for (std::size_t j = 0; j < positions.size(); ++j) key += digits_[r][positions[j]] * stride[j];
      common[key] &= optimal_[r];
    }
    return std::all_of(common.begin(), common.end(), [](const Mask& m) { return m.any(); });
  }

  std::vector<ElemSet> minimal_feasible() const {
    const std::size_t n = ground_.size();
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<char> feasible(subsets);
    for (std::uint64_t mask = 0; mask < subsets; ++mask) feasible[mask] = is_feasible(to_set(mask));
    std::vector<ElemSet> out;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      if (!feasible[mask]) continue;
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i) {
        if ((mask >> i & 1) && feasible[mask & ~(std::uint64_t{1} << i)]) minimal = false;
      }
      if (minimal) out.push_back(to_set(mask));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  BruteReport report() const {
    BruteReport rep;
    rep.bases = bases_;
    for (std::size_t r = 0; r < optimal_.size(); ++r) {
      rep.per_realization.push_back({weights_[r], pick(optimal_[r])});
    }
    rep.uob_family = uob_family();
    rep.colors = colors();
    rep.minimal_feasible = minimal_feasible();
    return rep;
  }

 private:
  std::vector<ElemSet> pick(const Mask& m) const {
    std::vector<ElemSet> out;
    for (auto b = m.find_first(); b != Mask::npos; b = m.find_next(b)) out.push_back(bases_[b]);
    return out;
  }

  ElemSet to_set(std::uint64_t mask) const {
    ElemSet s(u_.universe());
    for (std::size_t i = 0; i < ground_.size(); ++i) {
      if (mask >> i & 1) s.insert(ground_[i]);
    }
    return s;
  }

  UncertaintyMatroid u_;
  std::vector<Element> ground_;
  std::vector<std::size_t> radix_;
  std::vector<ElemSet> bases_;
  std::vector<std::vector<Rational>> weights_;
  std::vector<std::vector<std::size_t>> digits_;
  std::vector<Mask> optimal_;
};

inline Coloring brute_color(const UncertaintyMatroid& u, const BruteOptions& opts = {}) {
  return BruteEngine(u, opts).colors();
}

inline std::vector<ElemSet> brute_uob_family(const UncertaintyMatroid& u, const BruteOptions& opts = {}) {
  return BruteEngine(u, opts).uob_family();
}

struct BruteFeasibility {
  bool feasible = false;
  // Residual areas were not finite, so existence after each revelation was
  // decided by exists_uob rather than by enumeration.
  bool delegated = false;
};

inline BruteFeasibility brute_feasibility(const UncertaintyMatroid& u, const ElemSet& x,
                                          const BruteOptions& opts = {}) {
  bool all_finite = true;
  for (Element e : u.ground()) all_finite = all_finite && u.area(e).is_finite();
  if (all_finite) return {BruteEngine(u, opts).is_feasible(x), false};

  ElemSet revealed = x & u.ground();
  if (revealed.size() > opts.max_elements) {
    throw UnsupportedInstance("revealed set larger than the limit of " +
                              std::to_string(opts.max_elements));
  }
  Realizations r(u, revealed);
  if (r.count() > opts.max_realizations) {
    throw UnsupportedInstance(std::to_string(r.count()) + " revelations exceed the limit of " +
                              std::to_string(opts.max_realizations));
  }
  do {
    Assignment a;
    for (Element e : revealed) a.emplace(e, r.current()[e]);
    if (!exists_uob(reveal(u, a))) return {false, true};
  } while (r.advance());
  return {true, true};
}

inline bool brute_is_feasible(const UncertaintyMatroid& u, const ElemSet& x,
                              const BruteOptions& opts = {}) {
  return brute_feasibility(u, x, opts).feasible;
}

inline std::vector<ElemSet> brute_minimal_feasible(const UncertaintyMatroid& u,
                                                   const BruteOptions& opts = {}) {
  return BruteEngine(u, opts).minimal_feasible();
}

}  // namespace umat
