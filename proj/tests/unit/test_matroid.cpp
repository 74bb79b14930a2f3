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


#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "umat/generators.hpp"
#include "umat/matroid.hpp"

namespace umat {
namespace {

using fixtures::triangle;

ElemSet S(std::size_t n, std::initializer_list<Element> xs) { return ElemSet(n, xs); }

std::vector<Rational> W(std::initializer_list<Rational> xs) { return xs; }

TEST(IsIndependent, TriangleAndParallelPair) {
  EXPECT_TRUE(triangle().is_independent(S(3, {0, 1})));
  EXPECT_FALSE(triangle().is_independent(S(3, {0, 1, 2})));
  EXPECT_FALSE(fixtures::parallel_pair().is_independent(S(2, {0, 1})));
  EXPECT_TRUE(triangle().is_independent(S(3, {})));
}

TEST(IsIndependent, OutOfRangeIsInputError) {
  EXPECT_THROW(triangle().is_independent(S(4, {3})), InputError);
  EXPECT_THROW(S(3, {3}), InputError);
}

TEST(IsIndependent, SelfLoopIsDependent) {
  auto m = Matroid::graphic(1, {{0, 0}});
  EXPECT_FALSE(m.is_independent(S(1, {0})));
}

TEST(Construction, RejectsBadInput) {
  EXPECT_THROW(Matroid::graphic(2, {{0, 2}}), InputError);
  EXPECT_THROW(Matroid::uniform(2, 3), InputError);
  EXPECT_THROW(Matroid::from_bases(3, {}), InputError);
  EXPECT_THROW(Matroid::from_bases(3, {{0, 1}, {2}}), InputError);
  EXPECT_THROW(Matroid::from_bases(3, {{0, 5}}), InputError);
}

TEST(Construction, ExplicitBasesValidateExchange) {
  // {0,1} and {2,3}: removing 0 from {0,1} needs 2 or 3, but {1,2} and {1,3}
  // are missing.
  EXPECT_THROW(Matroid::from_bases(4, {{0, 1}, {2, 3}}), InputError);
  auto m = Matroid::from_bases(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
  EXPECT_TRUE(m.is_independent(S(4, {1, 3})));
  EXPECT_FALSE(m.is_independent(S(4, {1, 2, 3})));
}

TEST(Span, Examples) {
  EXPECT_EQ(span(triangle(), S(3, {0, 1})), S(3, {0, 1, 2}));
  EXPECT_EQ(span(triangle(), S(3, {})), S(3, {}));
  EXPECT_EQ(span(fixtures::parallel_pair(), S(2, {0})), S(2, {0, 1}));
}

TEST(Cospan, Examples) {
  EXPECT_EQ(cospan(triangle(), S(3, {0, 1})), S(3, {0, 1, 2}));
  EXPECT_EQ(oracle::dual_span(triangle(), S(3, {0, 1})), S(3, {0, 1, 2}));
  EXPECT_EQ(cospan(triangle(), S(3, {})), S(3, {}));
  EXPECT_EQ(cospan(fixtures::parallel_pair(), S(2, {})), S(2, {}));
  EXPECT_EQ(oracle::dual_span(fixtures::parallel_pair(), S(2, {})), S(2, {}));
}

TEST(GreedyMinBasis, Examples) {
  auto w = W({1, Rational(13, 2), 2});
  EXPECT_EQ(greedy_min_basis(triangle(), w), S(3, {0, 2}));
  EXPECT_EQ(oracle::min_basis_weight(triangle(), w), Rational(3));
  EXPECT_EQ(greedy_min_basis(Matroid::uniform(3, 2), W({5, 5, 5})), S(3, {0, 1}));
  EXPECT_EQ(greedy_min_basis(fixtures::path2(), W({7, -1})), S(2, {0, 1}));
  EXPECT_THROW(greedy_min_basis(triangle(), W({1, 2})), InputError);
}

TEST(FundamentalCircuit, Examples) {
  EXPECT_EQ(fundamental_circuit(triangle(), S(3, {0, 1}), 2), S(3, {0, 1, 2}));
  EXPECT_EQ(fundamental_circuit(fixtures::parallel_pair(), S(2, {0}), 1), S(2, {0, 1}));
  auto sq = fixtures::square_with_chord();
  ElemSet expected = S(5, {0, 1, 4});
  EXPECT_EQ(fundamental_circuit(sq, S(5, {0, 1, 2}), 4), expected);
  // The only circuit inside basis + chord, by enumeration.
  int inside = 0;
  for (const auto& c : oracle::circuits(sq)) {
    if (c.is_subset_of(S(5, {0, 1, 2, 4}))) {
      ++inside;
      EXPECT_EQ(c, expected);
    }
  }
  EXPECT_EQ(inside, 1);
}

TEST(FundamentalCircuit, ContractViolations) {
  EXPECT_THROW(fundamental_circuit(triangle(), S(3, {0}), 2), ContractViolation);
  EXPECT_THROW(fundamental_circuit(triangle(), S(3, {0, 1}), 1), ContractViolation);
}

TEST(Components, Examples) {
  auto tri = components(triangle());
  ASSERT_EQ(tri.size(), 1u);
  EXPECT_EQ(tri[0], S(3, {0, 1, 2}));

  auto path = components(fixtures::path2());
  ASSERT_EQ(path.size(), 2u);
  EXPECT_EQ(path[0], S(2, {0}));
  EXPECT_EQ(path[1], S(2, {1}));

  auto two = components(fixtures::two_disjoint_triangles());
  EXPECT_EQ(two, oracle::components(fixtures::two_disjoint_triangles()));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], S(6, {0, 1, 2}));
  EXPECT_EQ(two[1], S(6, {3, 4, 5}));
}

TEST(Components, LoopsAndColoopsAreSingletons) {
  auto m = Matroid::graphic(3, {{0, 0}, {0, 1}, {1, 2}, {1, 2}});
  auto comps = components(m);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], S(4, {0}));
  EXPECT_EQ(comps[1], S(4, {1}));
  EXPECT_EQ(comps[2], S(4, {2, 3}));
}

TEST(ContractDelete, Examples) {
  auto contracted = contract_delete(triangle(), S(3, {0}), S(3, {}));
  EXPECT_EQ(contracted.ground(), S(3, {1, 2}));
  EXPECT_EQ(rank(contracted), 1u);
  EXPECT_FALSE(contracted.is_independent(S(3, {1, 2})));
  EXPECT_TRUE(contracted.is_independent(S(3, {2})));
  EXPECT_FALSE(contracted.is_independent(S(3, {0})));

  auto deleted = contract_delete(triangle(), S(3, {}), S(3, {0}));
  EXPECT_EQ(oracle::bases(deleted), std::vector<ElemSet>{S(3, {1, 2})});

  auto same = contract_delete(triangle(), S(3, {}), S(3, {}));
  for (const auto& x : oracle::subsets(triangle().ground())) {
    EXPECT_EQ(same.is_independent(x), triangle().is_independent(x));
  }
}

TEST(ContractDelete, OverlapIsContractViolation) {
  EXPECT_THROW(contract_delete(triangle(), S(3, {0}), S(3, {0, 1})), ContractViolation);
}

// x is independent in M / C \ D iff x avoids C and D and
// r(x + C) = |x| + r(C).
TEST(ContractDelete, NestedMinorsMatchRankDefinition) {
  gen::Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Matroid m = gen::random_multigraph(rng, 4, 6);
    ElemSet c1(6), d1(6), c2(6), d2(6);
    for (Element e = 0; e < 6; ++e) {
      switch (gen::uniform_index(rng, 0, 4)) {
        case 0: c1.insert(e); break;
        case 1: d1.insert(e); break;
        case 2: c2.insert(e); break;
        case 3: d2.insert(e); break;
        default: break;
      }
    }
    Matroid nested = contract_delete(contract_delete(m, c1, d1), c2, d2);
    ElemSet c = c1 | c2, d = d1 | d2;
    std::size_t rc = oracle::rank_of(m, c);
    for (const auto& x : oracle::subsets(m.ground())) {
      bool expected = !x.intersects(c | d) && oracle::rank_of(m, x | c) == x.size() + rc;
      EXPECT_EQ(nested.is_independent(x), expected) << x.to_string();
    }
  }
}

std::vector<Matroid> property_matroids(gen::Rng& rng) {
  std::vector<Matroid> ms;
  for (auto& n : fixtures::small_matroids(7)) ms.push_back(n.matroid);
  for (int i = 0; i < 25; ++i) ms.push_back(gen::random_multigraph(rng, 4, gen::uniform_index(rng, 1, 7)));
  ms.push_back(Matroid::from_bases(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}));
  ms.push_back(dual(fixtures::k4()));
  ms.push_back(contract_delete(fixtures::k4(), ElemSet(6, {0}), ElemSet(6, {5})));
  return ms;
}

TEST(MatroidProperties, SpanIsExtensiveIdempotentAndMatchesRankOracle) {
  gen::Rng rng(11);
  for (const auto& m : property_matroids(rng)) {
    for (const auto& x : oracle::subsets(m.ground())) {
      ElemSet s = span(m, x);
      EXPECT_TRUE(x.is_subset_of(s));
      EXPECT_EQ(span(m, s), s);
      EXPECT_EQ(s, oracle::span(m, x));
    }
  }
}

TEST(MatroidProperties, CospanEqualsDualSpanExhaustively) {
  gen::Rng rng(12);
  for (const auto& m : property_matroids(rng)) {
    Matroid d = dual(m);
    for (const auto& x : oracle::subsets(m.ground())) {
      ElemSet c = cospan(m, x);
      EXPECT_EQ(c, span(d, x));
      EXPECT_EQ(c, oracle::dual_span(m, x));
    }
  }
}

TEST(MatroidProperties, GreedyIsOptimal) {
  gen::Rng rng(13);
  for (const auto& m : property_matroids(rng)) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> w;
      for (std::size_t e = 0; e < m.universe(); ++e) w.push_back(gen::grid_value(rng, 3));
      ElemSet b = greedy_min_basis(m, w);
      EXPECT_TRUE(is_basis(m, b));
      EXPECT_EQ(weight(b, w), oracle::min_basis_weight(m, w));
    }
  }
}

TEST(MatroidProperties, ExchangeComponentsMatchCircuitConnectivity) {
  gen::Rng rng(14);
  for (const auto& m : property_matroids(rng)) {
    auto fast = components(m);
    EXPECT_EQ(fast, oracle::components(m));
    for (Element e : m.ground()) {
      auto it = std::find_if(fast.begin(), fast.end(), [&](const ElemSet& c) { return c.contains(e); });
      ASSERT_NE(it, fast.end());
      EXPECT_EQ(component_of(m, e), *it);
    }
  }
}

TEST(MatroidProperties, FundamentalCircuitIsTheCircuitInBasisPlusElement) {
  gen::Rng rng(15);
  for (const auto& m : property_matroids(rng)) {
    auto cs = oracle::circuits(m);
    for (const auto& b : oracle::bases(m)) {
      for (Element e : m.ground() - b) {
        ElemSet fc = fundamental_circuit(m, b, e);
        EXPECT_TRUE(std::find(cs.begin(), cs.end(), fc) != cs.end());
        EXPECT_TRUE(fc.is_subset_of(b.with(e)));
        for (Element f : fc - ElemSet(m.universe(), {e})) EXPECT_TRUE(is_basis(m, b.without(f).with(e)));
      }
    }
  }
}

}  // namespace
}  // namespace umat
