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
#include <memory>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "umat/elem_set.hpp"
#include "umat/errors.hpp"
#include "umat/rational.hpp"

namespace umat {

class Matroid;

namespace kinds {

// Edges may repeat and may be self-loops.
struct Graphic {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct Uniform {
  std::size_t rank = 0;
};

struct Explicit {
  std::vector<ElemSet> bases;  // sorted, deduplicated
  std::set<ElemSet> lookup;
};

struct Dual {
  std::shared_ptr<const Matroid> inner;
};

// inner / contracted \ deleted, keeping the inner element indices.
struct Minor {
  std::shared_ptr<const Matroid> inner;
  ElemSet contracted;
  ElemSet contracted_basis;
  ElemSet deleted;
};

}  // namespace kinds

enum class MatroidKind { graphic, uniform, explicit_bases, dual, minor };

// A matroid given by an independence oracle. Element indices live in
// [0, universe()); the ground set may be a proper subset of that range when
// the matroid is a minor. Values are immutable and cheap to copy.
class Matroid {
 public:
  using Repr = std::variant<kinds::Graphic, kinds::Uniform, kinds::Explicit,
                            kinds::Dual, kinds::Minor>;

  static Matroid graphic(std::size_t vertices,
                         std::vector<std::pair<std::size_t, std::size_t>> edges) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].first >= vertices || edges[i].second >= vertices) {
        throw InputError("edge " + std::to_string(i) +
                         " has an endpoint outside 0.." +
                         std::to_string(vertices == 0 ? 0 : vertices - 1));
      }
    }
    std::size_t n = edges.size();
    return Matroid(kinds::Graphic{vertices, std::move(edges)}, n, ElemSet::full(n));
  }

  static Matroid uniform(std::size_t n, std::size_t rank) {
    if (rank > n) {
      throw InputError("uniform matroid rank " + std::to_string(rank) +
                       " exceeds ground size " + std::to_string(n));
    }
    return Matroid(kinds::Uniform{rank}, n, ElemSet::full(n));
  }

  // Rejects families that are empty, have unequal sizes, or violate basis
  // exchange.
  static Matroid from_bases(std::size_t n,
                            const std::vector<std::vector<Element>>& bases) {
    if (bases.empty()) throw InputError("explicit matroid needs at least one basis");
    kinds::Explicit ex;
    for (const auto& b : bases) {
      ElemSet s(n);
      for (Element e : b) {
        if (e >= n) {
          throw InputError("basis element " + std::to_string(e) +
                           " out of range for ground set of size " + std::to_string(n));
        }
        s.insert(e);
      }
      if (s.size() != b.size()) throw InputError("basis lists a repeated element");
      ex.lookup.insert(s);
    }
    ex.bases.assign(ex.lookup.begin(), ex.lookup.end());
    const std::size_t r = ex.bases.front().size();
    for (const auto& b : ex.bases) {
      if (b.size() != r) throw InputError("explicit bases have unequal sizes");
    }
    for (const auto& b1 : ex.bases) {
      for (const auto& b2 : ex.bases) {
        for (Element e : b1 - b2) {
          bool exchanged = false;
          for (Element f : b2 - b1) {
            if (ex.lookup.contains(b1.without(e).with(f))) {
              exchanged = true;
              break;
            }
          }
          if (!exchanged) {
            throw InputError("bases violate exchange: " + b1.to_string() + " - " +
                             std::to_string(e) + " has no replacement from " +
                             b2.to_string());
          }
        }
      }
    }
    return Matroid(std::move(ex), n, ElemSet::full(n));
  }

  std::size_t universe() const { return universe_; }
  const ElemSet& ground() const { return ground_; }
  const Repr& repr() const { return repr_; }
  MatroidKind kind() const { return static_cast<MatroidKind>(repr_.index()); }

  bool is_independent(const ElemSet& x) const {
    if (x.universe() != universe_) {
      throw InputError("element set over " + std::to_string(x.universe()) +
                       " indices passed to a matroid on " + std::to_string(universe_));
    }
    if (!x.is_subset_of(ground_)) return false;
    return std::visit([&](const auto& k) { return independent(k, x); }, repr_);
  }

 private:
  friend Matroid dual(const Matroid& m);
  friend Matroid contract_delete(const Matroid& m, const ElemSet& c, const ElemSet& d);

  Matroid(Repr repr, std::size_t universe, ElemSet ground)
      : repr_(std::move(repr)), universe_(universe), ground_(std::move(ground)) {}

  bool independent(const kinds::Graphic& g, const ElemSet& x) const {
    std::vector<std::size_t> parent(g.vertices);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    for (Element e : x) {
      auto a = find(g.edges[e].first);
      auto b = find(g.edges[e].second);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  }

  bool independent(const kinds::Uniform& u, const ElemSet& x) const {
    return x.size() <= u.rank;
  }

  bool independent(const kinds::Explicit& ex, const ElemSet& x) const {
    return std::any_of(ex.bases.begin(), ex.bases.end(),
                       [&](const ElemSet& b) { return x.is_subset_of(b); });
  }

  bool independent(const kinds::Dual& d, const ElemSet& x) const;

  bool independent(const kinds::Minor& m, const ElemSet& x) const {
    return m.inner->is_independent(x | m.contracted_basis);
  }

  Repr repr_;
  std::size_t universe_ = 0;
  ElemSet ground_;
};

// Greedy maximal independent subset of x, scanning in ascending index order.
inline ElemSet basis_of(const Matroid& m, const ElemSet& x) {
  ElemSet basis(m.universe());
  for (Element e : x) {
    basis.insert(e);
    if (!m.is_independent(basis)) basis.erase(e);
  }
  return basis;
}

inline std::size_t rank(const Matroid& m, const ElemSet& x) {
  return basis_of(m, x).size();
}

inline std::size_t rank(const Matroid& m) { return rank(m, m.ground()); }

inline bool is_basis(const Matroid& m, const ElemSet& x) {
  return m.is_independent(x) && x.size() == rank(m);
}

inline bool Matroid::independent(const kinds::Dual& d, const ElemSet& x) const {
  const Matroid& inner = *d.inner;
  return rank(inner, inner.ground() - x) == rank(inner);
}

inline Matroid dual(const Matroid& m) {
  return Matroid(kinds::Dual{std::make_shared<const Matroid>(m)}, m.universe(),
                 m.ground());
}

// m / c \ d. A maximal independent subset of c is fixed once so that every
// later independence test costs one oracle call on the inner matroid.
// Minors of minors are flattened onto the innermost matroid.
inline Matroid contract_delete(const Matroid& m, const ElemSet& c, const ElemSet& d) {
  if (c.intersects(d)) {
    throw ContractViolation("contracted and deleted sets overlap: " + (c & d).to_string());
  }
  if (!c.is_subset_of(m.ground()) || !d.is_subset_of(m.ground())) {
    throw ContractViolation("minor sets must lie in the ground set");
  }
  ElemSet new_basis = basis_of(m, c);
  ElemSet ground = m.ground() - c - d;
  if (const auto* inner = std::get_if<kinds::Minor>(&m.repr())) {
    return Matroid(kinds::Minor{inner->inner, inner->contracted | c,
                                inner->contracted_basis | new_basis, inner->deleted | d},
                   m.universe(), std::move(ground));
  }
  return Matroid(kinds::Minor{std::make_shared<const Matroid>(m), c, std::move(new_basis), d},
                 m.universe(), std::move(ground));
}

inline Matroid restrict_to(const Matroid& m, const ElemSet& keep) {
  return contract_delete(m, ElemSet(m.universe()), m.ground() - keep);
}

// Smallest superset of x with the same rank.
inline ElemSet span(const Matroid& m, const ElemSet& x) {
  ElemSet basis = basis_of(m, x);
  ElemSet result = x;
  for (Element e : m.ground() - x) {
    if (!m.is_independent(basis.with(e))) result.insert(e);
  }
  return result;
}

inline bool in_span(const Matroid& m, const ElemSet& x, Element e) {
  if (x.contains(e)) return true;
  return !m.is_independent(basis_of(m, x).with(e));
}

// x together with every e that (E - e) \ x fails to span.
inline ElemSet cospan(const Matroid& m, const ElemSet& x) {
  ElemSet result = x;
  for (Element e : m.ground() - x) {
    if (!in_span(m, (m.ground() - x).without(e), e)) result.insert(e);
  }
  return result;
}

// Scans elements by ascending (weight, index); weights are indexed by element.
inline ElemSet greedy_min_basis(const Matroid& m, std::span<const Rational> w) {
  if (w.size() != m.universe()) {
    throw InputError("weight vector has " + std::to_string(w.size()) +
                     " entries for " + std::to_string(m.universe()) + " elements");
  }
  std::vector<Element> order = m.ground().members();
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return w[a] < w[b]; });
  ElemSet basis(m.universe());
  for (Element e : order) {
    basis.insert(e);
    if (!m.is_independent(basis)) basis.erase(e);
  }
  return basis;
}

inline Rational weight(const ElemSet& x, std::span<const Rational> w) {
  Rational total = 0;
  for (Element e : x) total += w[e];
  return total;
}

inline ElemSet fundamental_circuit(const Matroid& m, const ElemSet& basis, Element e) {
  if (basis.contains(e)) {
    throw ContractViolation("element " + std::to_string(e) + " already in the basis");
  }
  if (!m.ground().contains(e)) {
    throw ContractViolation("element " + std::to_string(e) + " not in the ground set");
  }
  if (!is_basis(m, basis)) {
    throw ContractViolation(basis.to_string() + " is not a basis");
  }
  ElemSet circuit(m.universe());
  circuit.insert(e);
  ElemSet extended = basis.with(e);
  for (Element f : basis) {
    if (m.is_independent(extended.without(f))) circuit.insert(f);
  }
  return circuit;
}

namespace detail {

// Breadth-first search from start in the bipartite exchange graph of a
// fixed basis T: f in T and g outside T are adjacent iff T - f + g is
// independent. Edges are evaluated lazily, only towards unvisited vertices.
// visit(v) returning true stops the search early.
template <typename Visit>
ElemSet exchange_component(const Matroid& m, const ElemSet& basis, Element start,
                           Visit&& visit) {
  ElemSet seen(m.universe());
  seen.insert(start);
  if (visit(start)) return seen;
  ElemSet outside = m.ground() - basis;
  std::vector<Element> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element v = queue[head];
    const bool in_basis = basis.contains(v);
    const ElemSet& other_side = in_basis ? outside : basis;
    for (Element u : other_side - seen) {
      ElemSet swapped = in_basis ? basis.without(v).with(u) : basis.without(u).with(v);
      if (!m.is_independent(swapped)) continue;
      seen.insert(u);
      if (visit(u)) return seen;
      queue.push_back(u);
    }
  }
  return seen;
}

}  // namespace detail

// Connected component of e: e together with every f sharing a circuit with it.
inline ElemSet component_of(const Matroid& m, Element e) {
  if (!m.ground().contains(e)) {
    throw ContractViolation("element " + std::to_string(e) + " not in the ground set");
  }
  return detail::exchange_component(m, basis_of(m, m.ground()), e,
                                    [](Element) { return false; });
}

// Whether the component of e contains any member of targets; stops at the
// first hit.
inline bool component_meets(const Matroid& m, Element e, const ElemSet& targets) {
  if (!m.ground().contains(e)) {
    throw ContractViolation("element " + std::to_string(e) + " not in the ground set");
  }
  bool hit = false;
  detail::exchange_component(m, basis_of(m, m.ground()), e, [&](Element v) {
    hit = targets.contains(v);
    return hit;
  });
  return hit;
}

// Partition of the ground set into connected components, ordered by their
// smallest element. One greedy basis serves all searches.
inline std::vector<ElemSet> components(const Matroid& m) {
  ElemSet basis = basis_of(m, m.ground());
  ElemSet unassigned = m.ground();
  std::vector<ElemSet> result;
  while (!unassigned.empty()) {
    Element start = unassigned.first();
    ElemSet comp = detail::exchange_component(m, basis, start, [](Element) { return false; });
    unassigned -= comp;
    result.push_back(std::move(comp));
  }
  return result;
}

}  // namespace umat
