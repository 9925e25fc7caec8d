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

#include "predim/minimizer.hpp"

#include <gtest/gtest.h>

#include "predim/dimension.hpp"
#include "predim/oracle.hpp"
#include "test_util.hpp"

namespace predim {
namespace {

const Strategy kEngines[] = {Strategy::exhaustive, Strategy::decomposition, Strategy::flow,
                             Strategy::automatic};

// Every engine must return the oracle's inclusion-minimal minimizer.
void expect_engines_agree(const Structure& n, const ElementSet& a, const AlphaSpec& alpha,
                          const Rational& beta) {
  bool oracle_throws = false;
  DInResult expected;
  try {
    expected = oracle::d_in(n, a, alpha, beta);
  } catch (const InsufficientPrecision&) {
    oracle_throws = true;
  }
  for (Strategy s : kEngines) {
    MinimizeOptions opt{s, nullptr};
    if (oracle_throws) {
      EXPECT_THROW(d_in(n, a, alpha, beta, opt), InsufficientPrecision) << to_string(s);
      continue;
    }
    DInResult got = d_in(n, a, alpha, beta, opt);
    EXPECT_EQ(got.value, expected.value) << to_string(s);
    EXPECT_EQ(got.minimizer, expected.minimizer) << to_string(s);
  }
}

TEST(MinimizerTest, EnginesMatchOracleOnGraphs) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> size(1, 14);
    Structure n = testing::random_graph(size(rng), 0.2 + 0.5 * (trial % 5) / 5.0, rng);
    ElementSet a = testing::random_subset(n.elements(), 0.25, rng);
    expect_engines_agree(n, a, testing::random_alpha(rng), testing::random_beta(rng));
  }
}

TEST(MinimizerTest, EnginesMatchOracleOnMixedSignatures) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    Structure n = testing::random_mixed(11, 0.4, rng);
    ElementSet a = testing::random_subset(n.elements(), 0.2, rng);
    expect_engines_agree(n, a, testing::random_alpha(rng), testing::random_beta(rng));
  }
}

TEST(MinimizerTest, EnginesMatchOracleOnIntervals) {
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<int> lo(5, 90);
  for (int trial = 0; trial < 200; ++trial) {
    Structure n = testing::random_graph(10, 0.45, rng);
    ElementSet a = testing::random_subset(n.elements(), 0.3, rng);
    int l = lo(rng);
    int width = 1 + static_cast<int>(rng() % 8);
    AlphaSpec alpha = AlphaSpec::interval(Rational(l, 100), Rational(l + width, 100));
    expect_engines_agree(n, a, alpha, 1);
  }
}

// Twins and disjoint blocks: the shapes the decomposition engine exploits.
TEST(MinimizerTest, EnginesMatchOracleOnBlockStructures) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    // Complete bipartite core plus pendant blocks over a shared base.
    std::uniform_int_distribution<int> part(1, 5);
    int p = part(rng), q = part(rng);
    Structure n = Structure::graph(2);
    std::vector<ElementId> left, right;
    for (int i = 0; i < p; ++i) left.push_back(n.add_element());
    for (int i = 0; i < q; ++i) right.push_back(n.add_element());
    for (ElementId l : left) {
      n.add_edge(0, l);
      for (ElementId r : right) n.add_edge(l, r);
    }
    for (ElementId r : right) n.add_edge(1, r);
    int blocks = static_cast<int>(rng() % 3);
    for (int b = 0; b < blocks; ++b) {
      ElementId x = n.add_element(), y = n.add_element();
      n.add_edge(0, x);
      n.add_edge(1, x);
      n.add_edge(x, y);
      n.add_edge(0, y);
    }
    if (n.size() > 20) continue;
    expect_engines_agree(n, {0, 1}, testing::random_alpha(rng, 16), 1);
    expect_engines_agree(n, {}, testing::random_alpha(rng, 16), 1);
  }
}

TEST(MinimizerTest, RespectsAllowedSet) {
  Structure n = Structure::graph(3, {{0, 2}, {1, 2}});
  Hypergraph h(n);
  Weights w(AlphaSpec::exact(Rational(2, 3)), 1);
  std::vector<char> base = h.mask({0, 1});
  std::vector<char> allowed = h.mask({0, 1});
  for (Strategy s : kEngines) {
    Minimum m = minimize(h, w, base, allowed, {s, nullptr});
    EXPECT_EQ(h.ids(m.mask), (ElementSet{0, 1}));
    EXPECT_EQ(m.value, (Affine{0, 0}));
  }
}

TEST(MinimizerTest, BudgetIsEnforced) {
  std::mt19937_64 rng(113);
  Structure n = testing::random_graph(24, 0.3, rng);
  Budget budget(10);
  EXPECT_THROW(d_in(n, {}, AlphaSpec::exact(Rational(1, 2)), 1,
                    {Strategy::exhaustive, &budget}),
               BudgetExceeded);
}

TEST(MinimizerTest, LargeInputsAgreeAcrossFastEngines) {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 20; ++trial) {
    Structure n = testing::random_graph(40, 0.12, rng);
    AlphaSpec alpha = testing::random_alpha(rng);
    ElementSet a = testing::random_subset(n.elements(), 0.1, rng);
    DInResult f = d_in(n, a, alpha, 1, {Strategy::flow, nullptr});
    DInResult d = d_in(n, a, alpha, 1, {Strategy::decomposition, nullptr});
    EXPECT_EQ(f.minimizer, d.minimizer);
    EXPECT_EQ(f.value, d.value);
  }
}

}  // namespace
}  // namespace predim
