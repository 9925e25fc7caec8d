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

#include "predim/sampler.hpp"

#include <gtest/gtest.h>

#include <random>

#include "predim/structure_io.hpp"

namespace predim {
namespace {

SampleSpec spec(std::size_t n, Rational alpha, Rational coeff, std::uint64_t seed) {
  SampleSpec s;
  s.n = n;
  s.alpha = alpha;
  s.coeff = coeff;
  s.seed = seed;
  return s;
}

TEST(SampleTest, Extremes) {
  const Structure empty = sample(spec(30, Rational(1, 2), 0, 1));
  EXPECT_EQ(empty.size(), 30u);
  EXPECT_EQ(empty.instance_count(), 0u);
  // 2 * 4^-(1/2) = 1 exactly.
  const Structure full = sample(spec(4, Rational(1, 2), 2, 1));
  EXPECT_EQ(full.instance_count(), 6u);
  EXPECT_DOUBLE_EQ(edge_probability(spec(4, Rational(1, 2), 2, 1)), 1.0);
  EXPECT_THROW(edge_probability(spec(4, Rational(1, 2), Rational(201, 100), 1)), ProbabilityOverflow);
  EXPECT_THROW(edge_probability(spec(0, 1, 1, 1)), InvalidArgument);
  EXPECT_THROW(edge_probability(spec(5, 1, -1, 1)), InvalidArgument);
}

TEST(SampleTest, Reproducible) {
  const auto s = spec(200, Rational(7, 10), 1, 7);
  EXPECT_EQ(to_json(sample(s)).dump(), to_json(sample(s)).dump());
  auto t = s;
  t.seed = 8;
  EXPECT_NE(to_json(sample(s)).dump(), to_json(sample(t)).dump());
}

TEST(SampleTest, PrefixStable) {
  // Coins are tied to pair indices, so with p fixed (alpha = 0) a smaller
  // sample is an induced subgraph of a larger one.
  const Structure small = sample(spec(40, 0, Rational(1, 3), 3));
  const Structure large = sample(spec(60, 0, Rational(1, 3), 3));
  ElementSet first;
  for (ElementId v = 0; v < 40; ++v) first.push_back(v);
  EXPECT_EQ(to_json(induced(large, first)).dump(), to_json(small).dump());
  EXPECT_GT(small.instance_count(), 0u);
}

TEST(CensusTest, HandCounts) {
  const Structure k4 = named_pattern("K4");
  EXPECT_EQ(census(Structure::graph(6), named_pattern("edge")), 0u);
  EXPECT_EQ(census(k4, named_pattern("K3")), 4u);
  EXPECT_EQ(census(k4, named_pattern("K1")), 4u);
  EXPECT_EQ(census(k4, named_pattern("P3")), 4u);
  EXPECT_EQ(census(k4, named_pattern("C4")), 1u);
  EXPECT_EQ(census(named_pattern("C5"), named_pattern("P3")), 5u);
  EXPECT_EQ(census(named_pattern("C5"), named_pattern("E2")), 10u);
  EXPECT_EQ(census(k4, named_pattern("K5")), 0u);
  EXPECT_THROW(named_pattern("Q3"), InvalidArgument);
  EXPECT_THROW(named_pattern("K9"), InvalidArgument);
}

TEST(CensusTest, AgreesWithSubsetScan) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 5 + rng() % 5;
    Structure m = Structure::graph(n);
    for (ElementId u = 0; u < n; ++u) {
      for (ElementId v = u + 1; v < n; ++v) {
        if (rng() % 2) m.add_edge(u, v);
      }
    }
    for (const char* name : {"K3", "P3", "C4", "P4", "E2"}) {
      const Structure h = named_pattern(name);
      std::uint64_t expected = 0;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != h.size()) continue;
        ElementSet sub;
        for (ElementId v = 0; v < n; ++v) {
          if (mask >> v & 1) sub.push_back(v);
        }
        const Structure piece = induced(m, sub);
        // A copy of h on exactly these vertices: a bijection, not induced.
        bool found = false;
        std::vector<ElementId> perm(sub);
        do {
          bool ok = true;
          for (const Instance& e : h.instances(0)) {
            if (!piece.adjacent(perm[e[0]], perm[e[1]])) ok = false;
          }
          found = found || ok;
        } while (!found && std::next_permutation(perm.begin(), perm.end()));
        expected += found;
      }
      EXPECT_EQ(census(m, h), expected) << name << " trial " << trial;
    }
  }
}

TEST(CensusTest, MonotoneUnderEdges) {
  Structure m = sample(spec(40, 0, Rational(1, 5), 2));
  std::uint64_t last = census(m, named_pattern("K3"));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    m.add_edge(rng() % 20, 20 + rng() % 20);
    const std::uint64_t now = census(m, named_pattern("K3"));
    EXPECT_GE(now, last);
    last = now;
  }
}

TEST(CensusTest, Budget) {
  Budget budget(10);
  EXPECT_THROW(census(named_pattern("K6"), named_pattern("P4"), &budget), BudgetExceeded);
}

TEST(ExpectedTest, Formulas) {
  const auto s = spec(100, Rational(1, 2), 1, 0);
  const double p = 0.1;
  EXPECT_NEAR(expected_count(s, named_pattern("edge")), 4950 * p, 1e-9);
  EXPECT_NEAR(expected_count(s, named_pattern("K4")), 3921225 * std::pow(p, 6), 1e-9);
  // Three labelled paths per 3-set.
  EXPECT_NEAR(expected_count(s, named_pattern("P3")), 161700 * 3 * p * p, 1e-6);
  EXPECT_EQ(expected_count(spec(100, Rational(1, 2), 0, 0), named_pattern("K4")), 0.0);
}

}  // namespace
}  // namespace predim
