// Copyright 2026 The predim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "predim/closure.hpp"

#include <gtest/gtest.h>

#include "predim/oracle.hpp"
#include "test_util.hpp"

namespace predim {
namespace {

const AlphaSpec kHalf = AlphaSpec::exact(Rational(1, 2));
const AlphaSpec kTwoThirds = AlphaSpec::exact(Rational(2, 3));

// a = 0, b = 1, c = 2 with c joined to a and b.
Structure cherry() { return Structure::graph(3, {{0, 2}, {1, 2}}); }

TEST(ClosureTest, Intrinsic) {
  Structure b = cherry();
  EXPECT_TRUE(is_intrinsic(b.elements(), b, kTwoThirds));
  EXPECT_TRUE(is_intrinsic({0, 1}, b, kTwoThirds));
  Structure one_edge = Structure::graph(3, {{0, 2}});
  EXPECT_FALSE(is_intrinsic({0, 1}, one_edge, kHalf));
}

TEST(ClosureTest, IclLevels) {
  Structure m = cherry();
  EXPECT_EQ(icl_m(m, {0, 1}, 1, kTwoThirds), (ElementSet{0, 1}));
  EXPECT_EQ(icl_m(m, {0, 1}, 2, kTwoThirds), (ElementSet{0, 1, 2}));
  Structure discrete = Structure::graph(6);
  for (int level = 1; level <= 7; ++level) {
    EXPECT_EQ(icl_m(discrete, {1, 4}, level, kHalf), (ElementSet{1, 4}));
  }
  ClosureResult r = icl(m, {0, 1}, kTwoThirds);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.closure, (ElementSet{0, 1, 2}));
  EXPECT_EQ(icl(discrete, {2}, kHalf).closure, (ElementSet{2}));
}

TEST(ClosureTest, IclBudget) {
  std::mt19937_64 rng(3);
  Structure m = testing::random_graph(16, 0.7, rng);
  ASSERT_EQ(icl(m, {0}, kHalf).closure.size(), 16u);
  Budget budget(50);
  EXPECT_THROW(icl_m(m, {0}, 17, kHalf, 1,
                     {Strategy::automatic, &budget, false}),
               BudgetExceeded);
}

TEST(ClosureTest, OracleRoundsMatch) {
  int rounds = 0;
  ElementSet c = oracle::icl_definitional(cherry(), {0, 1}, kTwoThirds, 1, &rounds);
  EXPECT_EQ(c, (ElementSet{0, 1, 2}));
  EXPECT_GE(rounds, 2);
}

TEST(ClosureTest, Primitive) {
  // A point joined to the whole base is a one-step strong extension.
  Structure c = Structure::graph(3, {{0, 2}});
  EXPECT_TRUE(is_primitive({0, 1}, c, kHalf));
  // Two stacked layers: the first layer is intermediate and strong.
  Structure stacked = Structure::graph(4, {{0, 2}, {2, 3}});
  EXPECT_TRUE(is_strong({0, 1, 2}, stacked, kHalf));
  EXPECT_FALSE(is_primitive({0, 1}, stacked, kHalf));
  EXPECT_THROW(is_primitive({0, 1}, cherry(), kTwoThirds), NotStrong);
}

TEST(ClosureTest, MinimalPair) {
  Structure b = Structure::graph(4, {{0, 3}, {1, 3}, {2, 3}});
  EXPECT_TRUE(is_minimal_pair({0, 1, 2}, b, kHalf));
  EXPECT_FALSE(is_minimal_pair({0, 1, 2}, Structure::graph(4, {{0, 3}}), kHalf));
  Structure extra = b;
  extra.add_element(4);
  EXPECT_FALSE(is_minimal_pair({0, 1, 2}, extra, kHalf));
  EXPECT_FALSE(is_minimal_pair({0, 1, 2}, extra, kHalf, 1, {Strategy::automatic, nullptr, true}));
}

TEST(ClosureTest, CopyCounts) {
  Structure star = Structure::graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  Structure edge = Structure::graph(2, {{0, 1}});
  CopyCount c = chi(star, edge, {0});
  EXPECT_EQ(c.chi, 5u);
  EXPECT_EQ(c.chi_star, 5u);
  EXPECT_EQ(chi(star, induced(star, {0}), {0}).chi, 1u);

  // k copies of a path over its endpoint.
  Structure m = Structure::graph(1);
  for (int k = 0; k < 4; ++k) {
    ElementId x = m.add_element(), y = m.add_element();
    m.add_edge(0, x);
    m.add_edge(x, y);
  }
  Structure path = Structure::graph(3, {{0, 1}, {1, 2}});
  CopyCount p = chi(m, path, {0});
  EXPECT_EQ(p.chi, 4u);
  EXPECT_EQ(p.chi_star, 4u);

  // Overlapping copies: triangles sharing a vertex over the base.
  Structure bow = Structure::graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  Structure tri = Structure::graph(3, {{0, 1}, {0, 2}, {1, 2}});
  CopyCount t = chi(bow, tri, {0});
  EXPECT_EQ(t.chi, 2u);
  EXPECT_EQ(t.chi_star, 1u);
}

TEST(ClosureTest, CopyCountProperties) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    Structure m = testing::random_graph(9, 0.4, rng);
    Structure pattern = Structure::graph(3, {{0, 1}, {1, 2}});
    CopyCount c = chi(m, pattern, {0});
    EXPECT_LE(c.chi_star, c.chi);
    EXPECT_LE(c.greedy, c.chi_star);
    std::map<ElementId, ElementId> rename;
    for (ElementId id : m.elements()) rename[id] = id == 0 ? 0 : 50 - id;
    CopyCount r = chi(relabel(m, rename), pattern, {0});
    EXPECT_EQ(r.chi, c.chi);
    EXPECT_EQ(r.chi_star, c.chi_star);
  }
}

TEST(ClosureTest, Independence) {
  Structure discrete = Structure::graph(4);
  IndependenceCertificate ind = d_independent(discrete, {0}, {1}, {}, kHalf);
  EXPECT_TRUE(ind.independent);
  EXPECT_EQ(ind.d_over_c, DimValue::constant(1));

  // a = b: dependent unless a is in the closure of c.
  EXPECT_FALSE(d_independent(discrete, {0}, {0}, {}, kHalf).independent);
  EXPECT_TRUE(d_independent(discrete, {0}, {0}, {0}, kHalf).independent);

  // c joined to a and b: c depends on b over a.
  IndependenceCertificate dep = d_independent(cherry(), {2}, {1}, {0}, kTwoThirds);
  EXPECT_FALSE(dep.dimension_clause);
}

TEST(ClosureTest, MatchesOracleOnRandomStructures) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    Structure m = testing::random_graph(9, 0.35, rng);
    AlphaSpec alpha = testing::random_alpha(rng);
    ElementSet a = testing::random_subset(m.elements(), 0.3, rng);
    ClosureResult r = icl(m, a, alpha);
    ASSERT_TRUE(r.converged);
    EXPECT_EQ(r.closure, oracle::icl_definitional(m, a, alpha));
    EXPECT_EQ(r.closure, oracle::icl_intersection(m, a, alpha));
    EXPECT_EQ(icl(m, r.closure, alpha).closure, r.closure);
    EXPECT_TRUE(is_strong(r.closure, m, alpha));
    EXPECT_EQ(icl_m(m, a, static_cast<int>(m.size()) + 1, alpha), r.closure);
    // Monotone in the base.
    ElementSet bigger = set_union(a, testing::random_subset(m.elements(), 0.2, rng));
    EXPECT_TRUE(is_subset(r.closure, icl(m, bigger, alpha).closure));

    ElementSet b = r.closure;
    if (b.size() < m.size() && is_strong(b, m, alpha)) {
      EXPECT_EQ(is_primitive(b, m, alpha), oracle::is_primitive(b, m, alpha));
    }
    EXPECT_EQ(is_intrinsic(a, induced(m, r.closure), alpha),
              oracle::is_intrinsic(a, induced(m, r.closure), alpha));
    Structure sub = induced(m, r.closure);
    EXPECT_EQ(is_minimal_pair(a, sub, alpha),
              is_minimal_pair(a, sub, alpha, 1, {Strategy::automatic, nullptr, true}));
  }
}

TEST(ClosureTest, ClosedSetsAmalgamateTrivially) {
  std::mt19937_64 rng(19);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Structure m = testing::random_graph(10, 0.3, rng);
    AlphaSpec alpha = testing::random_alpha(rng);
    if (!is_in_K(m, alpha).member) continue;
    ElementSet a = icl(m, testing::random_subset(m.elements(), 0.3, rng), alpha).closure;
    ElementSet b = icl(m, testing::random_subset(m.elements(), 0.3, rng), alpha).closure;
    ElementSet c = set_intersection(a, b);
    if (icl(m, c, alpha).closure != c) continue;
    if (!d_independent(m, a, b, c, alpha).independent) continue;
    ++checked;
    EXPECT_EQ(icl(m, set_union(a, b), alpha).closure, set_union(a, b));
  }
  EXPECT_GT(checked, 20);
}

}  // namespace
}  // namespace predim
