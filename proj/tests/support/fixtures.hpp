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

#include <string>
#include <vector>

#include "umat/generators.hpp"
#include "umat/matroid.hpp"
#include "umat/uncertainty.hpp"

namespace umat::fixtures {

// Edges e0 = 01, e1 = 12, e2 = 20.
inline Matroid triangle() { return Matroid::graphic(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Matroid parallel_pair() { return Matroid::graphic(2, {{0, 1}, {0, 1}}); }

inline Matroid path2() { return Matroid::graphic(3, {{0, 1}, {1, 2}}); }

// Square 0-1-2-3-0 with chord 0-2: edges 01, 12, 23, 30, 02.
inline Matroid square_with_chord() {
  return Matroid::graphic(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

inline Matroid two_disjoint_triangles() {
  return Matroid::graphic(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

// Bowtie: triangles 0-1-2 and 0-3-4 sharing vertex 0.
inline Matroid bowtie() {
  return Matroid::graphic(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

inline Matroid triangle_pendant() { return Matroid::graphic(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}); }

inline Matroid k4() {
  return Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline Area ab(long long a, long long b) { return Area::closed(a, b); }
inline Area pts(std::vector<Rational> v) { return Area::points(v); }

inline UncertaintyMatroid spread_triangle() { return {triangle(), {ab(0, 2), ab(4, 9), ab(1, 3)}}; }
inline UncertaintyMatroid unit_triangle() { return {triangle(), {ab(0, 1), ab(0, 1), ab(0, 1)}}; }
inline UncertaintyMatroid zero_one_triangle() {
  return {triangle(), {pts({0, 1}), pts({0, 1}), pts({0, 1})}};
}

// Endpoint version of the spread triangle: {0,2}, {4,9}, {1,3}.
inline UncertaintyMatroid spread_triangle_endpoints() {
  return {triangle(), {pts({0, 2}), pts({4, 9}), pts({1, 3})}};
}

// a = {5}, b = [0, 10] on two parallel edges.
inline UncertaintyMatroid parallel_point_interval() {
  return {parallel_pair(), {Area::point(5), ab(0, 10)}};
}

struct Named {
  std::string name;
  Matroid matroid;
};

// Small matroids used by the exhaustive property sweeps.
inline std::vector<Named> small_matroids(std::size_t max_elements) {
  std::vector<Named> out;
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_elements, 4); ++n) {
    for (std::size_t r = 0; r <= n; ++r) {
      out.push_back({"U" + std::to_string(r) + "," + std::to_string(n), Matroid::uniform(n, r)});
    }
  }
  out.push_back({"triangle", triangle()});
  out.push_back({"parallel_pair", parallel_pair()});
  out.push_back({"path2", path2()});
  out.push_back({"triple_parallel", Matroid::graphic(2, {{0, 1}, {0, 1}, {0, 1}})});
  out.push_back({"loop_and_edge", Matroid::graphic(2, {{0, 0}, {0, 1}})});
  out.push_back({"triangle_pendant", triangle_pendant()});
  out.push_back({"square_chord", square_with_chord()});
  out.push_back({"theta", Matroid::graphic(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 3}})});
  if (max_elements >= 6) {
    out.push_back({"U2,5", Matroid::uniform(5, 2)});
    out.push_back({"U3,6", Matroid::uniform(6, 3)});
    out.push_back({"two_triangles", two_disjoint_triangles()});
    out.push_back({"bowtie", bowtie()});
    out.push_back({"k4", k4()});
    out.push_back({"double_parallel_path", Matroid::graphic(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 0}})});
  }
  std::erase_if(out, [&](const Named& n) { return n.matroid.universe() > max_elements; });
  return out;
}

}  // namespace umat::fixtures
