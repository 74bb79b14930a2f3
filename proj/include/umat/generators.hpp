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
#include <random>
#include <utility>
#include <vector>

#include "umat/matroid.hpp"
#include "umat/rational.hpp"
#include "umat/uncertainty.hpp"

// Random instance generators shared by the test suites and the corpus tool.

namespace umat::gen {

using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// A random spanning tree plus extra edges chosen uniformly among vertex
// pairs (parallel edges allowed; self-loops only when requested).
inline Matroid random_connected_multigraph(Rng& rng, std::size_t vertices, std::size_t edges,
                                           bool loops = false) {
  std::vector<std::pair<std::size_t, std::size_t>> list;
  for (std::size_t v = 1; v < vertices && list.size() < edges; ++v) {
    list.emplace_back(uniform_index(rng, 0, v - 1), v);
  }
  while (list.size() < edges) {
    std::size_t a = uniform_index(rng, 0, vertices - 1);
    std::size_t b = uniform_index(rng, 0, vertices - 1);
    if (a == b && !loops) continue;
    list.emplace_back(a, b);
  }
  std::shuffle(list.begin(), list.end(), rng);
  return Matroid::graphic(vertices, std::move(list));
}

// Any multigraph, possibly disconnected, with self-loops.
inline Matroid random_multigraph(Rng& rng, std::size_t vertices, std::size_t edges) {
  std::vector<std::pair<std::size_t, std::size_t>> list;
  for (std::size_t i = 0; i < edges; ++i) {
    list.emplace_back(uniform_index(rng, 0, vertices - 1), uniform_index(rng, 0, vertices - 1));
  }
  return Matroid::graphic(vertices, std::move(list));
}

inline Matroid random_uniform(Rng& rng, std::size_t n) {
  return Matroid::uniform(n, uniform_index(rng, 0, n));
}

// Grid value k/2 for k in [0, 2*range].
inline Rational grid_value(Rng& rng, int range) {
  return Rational(static_cast<long long>(uniform_index(rng, 0, 2 * static_cast<std::size_t>(range))), 2);
}

// One to max_points distinct integer points in [0, range].
inline Area random_finite_area(Rng& rng, std::size_t max_points, int range) {
  std::size_t count = uniform_index(rng, 1, max_points);
  std::vector<Rational> pts;
  for (std::size_t i = 0; i < count; ++i) {
    pts.emplace_back(static_cast<long long>(uniform_index(rng, 0, static_cast<std::size_t>(range))));
  }
  return Area::points(pts);
}

// A single piece: a point, or an interval with random endpoint types.
inline Area random_interval_area(Rng& rng, int range) {
  Rational a = grid_value(rng, range);
  Rational b = grid_value(rng, range);
  if (a == b || coin(rng, 0.2)) return Area::point(a);
  if (b < a) std::swap(a, b);
  return Area({Piece::interval(a, b, coin(rng), coin(rng))});
}

// One to three pieces of any kind, merged by Area's normalization.
inline Area random_mixed_area(Rng& rng, int range) {
  std::size_t count = uniform_index(rng, 1, 3);
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < count; ++i) {
    const Area piece = random_interval_area(rng, range);
    pieces.push_back(piece.pieces().front());
  }
  return Area(std::move(pieces));
}

enum class AreaKind { finite, interval, mixed, zero_one };

inline Area random_area(Rng& rng, AreaKind kind, int range, std::size_t max_points = 3) {
  switch (kind) {
    case AreaKind::finite:
      return random_finite_area(rng, max_points, range);
    case AreaKind::interval:
      return random_interval_area(rng, range);
    case AreaKind::mixed:
      return random_mixed_area(rng, range);
    case AreaKind::zero_one:
      break;
  }
  return Area::points({Rational(0), Rational(1)});
}

inline std::vector<Rational> random_costs(Rng& rng, std::size_t n, bool allow_negative) {
  std::vector<Rational> costs;
  for (std::size_t i = 0; i < n; ++i) {
    long long c = static_cast<long long>(uniform_index(rng, 0, 6));
    if (allow_negative) c -= 2;
    costs.emplace_back(c);
  }
  return costs;
}

inline UncertaintyMatroid random_instance(Rng& rng, Matroid m, AreaKind kind, int range,
                                          std::size_t max_points = 3, bool with_costs = false) {
  std::vector<Area> areas;
  for (std::size_t i = 0; i < m.universe(); ++i) areas.push_back(random_area(rng, kind, range, max_points));
  std::optional<std::vector<Rational>> costs;
  if (with_costs) costs = random_costs(rng, m.universe(), true);
  return UncertaintyMatroid(std::move(m), std::move(areas), std::move(costs));
}

}  // namespace umat::gen
