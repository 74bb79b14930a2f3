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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umat/elem_set.hpp"
#include "umat/errors.hpp"
#include "umat/matroid.hpp"
#include "umat/rational.hpp"

namespace umat {

// A single point, or an interval with lo < hi and independent endpoint
// closedness. Points are stored as lo == hi with both ends closed.
struct Piece {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static Piece point(Rational v) { return {v, v, true, true}; }
  static Piece interval(Rational lo, Rational hi, bool lo_closed, bool hi_closed) {
    return {std::move(lo), std::move(hi), lo_closed, hi_closed};
  }

  bool is_point() const { return lo == hi; }

  bool contains(const Rational& v) const {
    bool above = lo_closed ? lo <= v : lo < v;
    bool below = hi_closed ? v <= hi : v < hi;
    return above && below;
  }

  friend bool operator==(const Piece&, const Piece&) = default;
};

// Nonempty bounded subset of the rationals: a strictly ascending list of
// disjoint, non-touching pieces.
class Area {
 public:
  // Normalizes: sorts, merges overlapping or touching pieces, and stores
  // degenerate closed intervals as points.
  explicit Area(std::vector<Piece> pieces) : pieces_(normalize(std::move(pieces))) {}

  static Area point(Rational v) { return Area({Piece::point(std::move(v))}); }
  static Area points(const std::vector<Rational>& values) {
    std::vector<Piece> ps;
    for (const auto& v : values) ps.push_back(Piece::point(v));
    return Area(std::move(ps));
  }
  static Area closed(Rational lo, Rational hi) {
    return Area({Piece::interval(std::move(lo), std::move(hi), true, true)});
  }
  static Area open(Rational lo, Rational hi) {
    return Area({Piece::interval(std::move(lo), std::move(hi), false, false)});
  }

  const std::vector<Piece>& pieces() const { return pieces_; }
  const Rational& lower() const { return pieces_.front().lo; }
  const Rational& upper() const { return pieces_.back().hi; }

  bool is_singleton() const { return pieces_.size() == 1 && pieces_.front().is_point(); }
  bool is_finite() const {
    return std::all_of(pieces_.begin(), pieces_.end(),
                       [](const Piece& p) { return p.is_point(); });
  }
  // Exactly the two points {lower(), upper()}.
  bool is_two_point() const { return pieces_.size() == 2 && is_finite(); }

  std::vector<Rational> finite_members() const {
    if (!is_finite()) throw UnsupportedInstance("area has a non-degenerate interval");
    std::vector<Rational> out;
    for (const auto& p : pieces_) out.push_back(p.lo);
    return out;
  }

  bool contains(const Rational& v) const {
    return std::any_of(pieces_.begin(), pieces_.end(),
                       [&](const Piece& p) { return p.contains(v); });
  }

  // Whether the area meets the open interval (lo, hi); empty when lo == hi.
  bool intersects_open(const Rational& lo, const Rational& hi) const {
    if (hi < lo) throw ContractViolation("open interval with lo > hi");
    for (const auto& p : pieces_) {
      if (p.is_point()) {
        if (lo < p.lo && p.lo < hi) return true;
      } else if (std::max(p.lo, lo) < std::min(p.hi, hi)) {
        return true;
      }
    }
    return false;
  }

  // Some member v with v <= x.
  bool has_member_at_most(const Rational& x) const {
    const Piece& p = pieces_.front();
    return p.lo < x || (p.lo == x && p.lo_closed);
  }
  // Some member v with v >= x.
  bool has_member_at_least(const Rational& x) const {
    const Piece& p = pieces_.back();
    return x < p.hi || (p.hi == x && p.hi_closed);
  }

  // The closed hull [lower, upper].
  Area closure() const { return Area({Piece::interval(lower(), upper(), true, true)}); }

  friend bool operator==(const Area&, const Area&) = default;

 private:
  static std::vector<Piece> normalize(std::vector<Piece> in) {
    if (in.empty()) throw InputError("area must be nonempty");
    for (const auto& p : in) {
      if (p.hi < p.lo) {
        throw InputError("interval [" + to_string(p.lo) + ", " + to_string(p.hi) +
                         "] has lo > hi");
      }
      if (p.lo == p.hi && !(p.lo_closed && p.hi_closed)) {
        throw InputError("degenerate interval at " + to_string(p.lo) +
                         " with an open endpoint is empty");
      }
    }
    std::sort(in.begin(), in.end(), [](const Piece& a, const Piece& b) {
      if (a.lo != b.lo) return a.lo < b.lo;
      return a.lo_closed && !b.lo_closed;
    });
    std::vector<Piece> out;
    for (auto& p : in) {
      if (!out.empty()) {
        Piece& cur = out.back();
        bool joins = p.lo < cur.hi || (p.lo == cur.hi && (cur.hi_closed || p.lo_closed));
        if (joins) {
          if (p.lo == cur.lo) cur.lo_closed = cur.lo_closed || p.lo_closed;
          if (cur.hi < p.hi) {
            cur.hi = p.hi;
            cur.hi_closed = p.hi_closed;
          } else if (cur.hi == p.hi) {
            cur.hi_closed = cur.hi_closed || p.hi_closed;
          }
          continue;
        }
      }
      out.push_back(std::move(p));
    }
    return out;
  }

  std::vector<Piece> pieces_;
};

inline std::pair<Rational, Rational> bounds(const Area& a) { return {a.lower(), a.upper()}; }

inline bool intersects_open(const Area& a, const Rational& lo, const Rational& hi) {
  return a.intersects_open(lo, hi);
}

// A matroid with an uncertainty area (and optionally a query cost) per
// element. Areas and costs are indexed by element over the matroid's whole
// index range; entries outside the ground set are carried but ignored.
class UncertaintyMatroid {
 public:
  UncertaintyMatroid(Matroid matroid, std::vector<Area> areas,
                     std::optional<std::vector<Rational>> costs = std::nullopt)
      : matroid_(std::move(matroid)), areas_(std::move(areas)), costs_(std::move(costs)) {
    if (areas_.size() != matroid_.universe()) {
      throw InputError("got " + std::to_string(areas_.size()) + " areas for " +
                       std::to_string(matroid_.universe()) + " elements");
    }
    if (costs_ && costs_->size() != matroid_.universe()) {
      throw InputError("got " + std::to_string(costs_->size()) + " costs for " +
                       std::to_string(matroid_.universe()) + " elements");
    }
  }

  const Matroid& matroid() const { return matroid_; }
  const ElemSet& ground() const { return matroid_.ground(); }
  std::size_t universe() const { return matroid_.universe(); }

  const std::vector<Area>& areas() const { return areas_; }
  const Area& area(Element e) const { return areas_.at(e); }
  const Rational& lower(Element e) const { return areas_.at(e).lower(); }
  const Rational& upper(Element e) const { return areas_.at(e).upper(); }
  bool is_certain(Element e) const { return areas_.at(e).is_singleton(); }

  bool has_costs() const { return costs_.has_value(); }
  const std::optional<std::vector<Rational>>& costs() const { return costs_; }

  // Same areas and costs over a different matroid on the same indices
  // (typically a minor).
  UncertaintyMatroid with_matroid(Matroid m) const {
    return UncertaintyMatroid(std::move(m), areas_, costs_);
  }
  UncertaintyMatroid with_areas(std::vector<Area> areas) const {
    return UncertaintyMatroid(matroid_, std::move(areas), costs_);
  }
  UncertaintyMatroid with_costs(std::vector<Rational> costs) const {
    return UncertaintyMatroid(matroid_, areas_, std::move(costs));
  }

  // Ground elements whose area is not a single point.
  ElemSet uncertain() const {
    ElemSet s(universe());
    for (Element e : ground()) {
      if (!is_certain(e)) s.insert(e);
    }
    return s;
  }

 private:
  Matroid matroid_;
  std::vector<Area> areas_;
  std::optional<std::vector<Rational>> costs_;
};

using Assignment = std::map<Element, Rational>;

// Revelation: each assigned element's area becomes the assigned point.
inline UncertaintyMatroid reveal(const UncertaintyMatroid& u, const Assignment& assignment) {
  std::vector<Area> areas = u.areas();
  for (const auto& [e, v] : assignment) {
    if (!u.ground().contains(e)) {
      throw InputError("cannot reveal element " + std::to_string(e) +
                       ": not in the ground set");
    }
    if (!u.area(e).contains(v)) {
      throw InputError("revealed value " + to_string(v) + " for element " +
                       std::to_string(e) + " lies outside its area");
    }
    areas[e] = Area::point(v);
  }
  return u.with_areas(std::move(areas));
}

inline UncertaintyMatroid closure(const UncertaintyMatroid& u) {
  std::vector<Area> areas;
  areas.reserve(u.universe());
  for (const auto& a : u.areas()) areas.push_back(a.closure());
  return u.with_areas(std::move(areas));
}

// Odometer over the Cartesian product of the finite areas of `elements`.
// Each state is a full weight vector indexed by element; entries outside
// `elements` hold the element's lower bound.
class Realizations {
 public:
  Realizations(const UncertaintyMatroid& u, const ElemSet& elements)
      : elements_(elements.members()) {
    values_.reserve(elements_.size());
    for (Element e : elements_) {
      if (!u.area(e).is_finite()) {
        throw UnsupportedInstance("element " + std::to_string(e) +
                                  " has a non-finite area; cannot enumerate realizations");
      }
      values_.push_back(u.area(e).finite_members());
    }
    digits_.assign(elements_.size(), 0);
    current_.reserve(u.universe());
    for (Element e = 0; e < u.universe(); ++e) current_.push_back(u.lower(e));
  }

  explicit Realizations(const UncertaintyMatroid& u) : Realizations(u, u.ground()) {}

  const std::vector<Rational>& current() const { return current_; }
  const std::vector<std::size_t>& digits() const { return digits_; }
  const std::vector<Element>& elements() const { return elements_; }

  // Product of the area sizes; saturates at max on overflow.
  std::size_t count() const {
    std::size_t total = 1;
    for (const auto& v : values_) {
      if (total > static_cast<std::size_t>(-1) / v.size()) return static_cast<std::size_t>(-1);
      total *= v.size();
    }
    return total;
  }

  // Advances to the next realization; false once all have been visited.
  bool advance() {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (++digits_[i] < values_[i].size()) {
        current_[elements_[i]] = values_[i][digits_[i]];
        return true;
      }
      digits_[i] = 0;
      current_[elements_[i]] = values_[i][0];
    }
    return false;
  }

 private:
  std::vector<Element> elements_;
  std::vector<std::vector<Rational>> values_;
  std::vector<std::size_t> digits_;
  std::vector<Rational> current_;
};

template <typename Fn>
void for_each_realization(const UncertaintyMatroid& u, const ElemSet& elements, Fn&& fn) {
  Realizations r(u, elements);
  do {
    fn(r.current());
  } while (r.advance());
}

inline std::vector<std::vector<Rational>> enumerate_realizations(const UncertaintyMatroid& u) {
  std::vector<std::vector<Rational>> out;
  for_each_realization(u, u.ground(), [&](const std::vector<Rational>& w) { out.push_back(w); });
  return out;
}

}  // namespace umat
