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
#include <vector>

#include "umat/elem_set.hpp"
#include "umat/matroid.hpp"
#include "umat/uncertainty.hpp"

namespace umat {

struct ElementColor {
  bool blue = false;
  bool red = false;
  bool certain = false;

  bool colored() const { return blue || red; }
  friend bool operator==(const ElementColor&, const ElementColor&) = default;
};

// Per-element colors indexed by element. Entries outside the ground set are
// left default and never selected.
struct Coloring {
  std::vector<ElementColor> colors;
  ElemSet ground;

  const ElementColor& operator[](Element e) const { return colors.at(e); }

  ElemSet blue_uncertain() const { return select([](const ElementColor& c) { return c.blue && !c.certain; }); }
  ElemSet red_uncertain() const { return select([](const ElementColor& c) { return c.red && !c.certain; }); }
  ElemSet uncolored_uncertain() const {
    return select([](const ElementColor& c) { return !c.certain && !c.colored(); });
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  template <typename Pred>
  ElemSet select(Pred pred) const {
    ElemSet s(colors.size());
    for (Element e : ground) {
      if (pred(colors[e])) s.insert(e);
    }
    return s;
  }
};

// F(e): elements that may weigh strictly less than e.
inline ElemSet f_set(const UncertaintyMatroid& u, Element e) {
  ElemSet s(u.universe());
  for (Element f : u.ground()) {
    if (f != e && u.lower(f) < u.upper(e)) s.insert(f);
  }
  return s;
}

// F*(e): elements that may weigh strictly more than e.
inline ElemSet f_star_set(const UncertaintyMatroid& u, Element e) {
  ElemSet s(u.universe());
  for (Element f : u.ground()) {
    if (f != e && u.lower(e) < u.upper(f)) s.insert(f);
  }
  return s;
}

// In some minimum basis under every realization.
inline bool is_blue(const UncertaintyMatroid& u, Element e) {
  return !in_span(u.matroid(), f_set(u, e), e);
}

// Avoided by some minimum basis under every realization. Tested as
// e in span((E - e) \ F*(e)) instead of materializing the cospan.
inline bool is_red(const UncertaintyMatroid& u, Element e) {
  ElemSet rest = (u.ground() - f_star_set(u, e)).without(e);
  return in_span(u.matroid(), rest, e);
}

// Sorts bounds once; F(e) and F*(e) are read off as a prefix of the
// ascending lower bounds and a suffix of the ascending upper bounds.
inline Coloring color_all(const UncertaintyMatroid& u) {
  const Matroid& m = u.matroid();
  std::vector<Element> by_lower = u.ground().members();
  std::vector<Element> by_upper = by_lower;
  std::sort(by_lower.begin(), by_lower.end(),
            [&](Element a, Element b) { return u.lower(a) < u.lower(b); });
  std::sort(by_upper.begin(), by_upper.end(),
            [&](Element a, Element b) { return u.upper(a) < u.upper(b); });

  Coloring out;
  out.colors.resize(u.universe());
  out.ground = u.ground();
  for (Element e : u.ground()) {
    ElementColor& c = out.colors[e];
    c.certain = u.is_certain(e);

    // {f : L_f < U_e}
    ElemSet below(u.universe());
    for (Element f : by_lower) {
      if (!(u.lower(f) < u.upper(e))) break;
      if (f != e) below.insert(f);
    }
    c.blue = !in_span(m, below, e);

    // (E - e) \ F*(e) = {f != e : U_f <= L_e}
    ElemSet not_above(u.universe());
    for (Element f : by_upper) {
      if (u.lower(e) < u.upper(f)) break;
      if (f != e) not_above.insert(f);
    }
    c.red = in_span(m, not_above, e);
  }
  return out;
}

}  // namespace umat
