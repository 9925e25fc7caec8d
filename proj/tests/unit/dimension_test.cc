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

#include "predim/dimension.hpp"

#include <gtest/gtest.h>

#include "predim/oracle.hpp"
#include "test_util.hpp"

namespace predim {
namespace {

const AlphaSpec kHalf = AlphaSpec::exact(Rational(1, 2));
const AlphaSpec kTwoThirds = AlphaSpec::exact(Rational(2, 3));

Structure complete(int n) {
  Structure s = Structure::graph(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) s.add_edge(i, j);
  }
  return s;
}

// a = 0, b = 1, c = 2 with c joined to a and b.
Structure cherry() { return Structure::graph(3, {{0, 2}, {1, 2}}); }

TEST(DimensionTest, Counts) {
  EXPECT_EQ(e_count(Structure::graph(4)), 0u);
  EXPECT_EQ(e_count(complete(3)), 3u);
  Structure star = Structure::graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_EQ(e_cross(star, {0}, {1, 2, 3, 4}), 4u);
  EXPECT_EQ(e_cross(star, {1}, {2}), 0u);
  EXPECT_THROW(e_cross(star, {0, 1}, {1}), SetsNotDisjoint);
  // Binary: only the A-C edges count.
  Structure path = Structure::graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(e_cross3(path, {0}, {1}, {2}), 1u);
}

TEST(DimensionTest, Delta) {
  EXPECT_EQ(delta(Structure::graph(0)), DimValue{});
  EXPECT_EQ(delta(complete(3)).at(Rational(1, 2)), Rational(3, 2));
  EXPECT_EQ(delta_rel(cherry(), {2}, {0, 1}).at(Rational(2, 3)), Rational(-1, 3));
  EXPECT_EQ(delta_rel(cherry(), {2}, {}), delta(induced(cherry(), {2})));
  EXPECT_EQ(delta(complete(3), 2), DimValue(6, 3));
}

TEST(DimensionTest, DIn) {
  DInResult r = d_in(cherry(), {0, 1}, kTwoThirds);
  EXPECT_EQ(r.value.at(Rational(2, 3)), Rational(5, 3));
  EXPECT_EQ(r.minimizer, (ElementSet{0, 1, 2}));
  EXPECT_EQ(d_in(complete(3), {}, kHalf).value, DimValue{});
  // Strong sets return their own delta.
  DInResult s = d_in(cherry(), {0, 2}, kTwoThirds);
  EXPECT_EQ(s.minimizer, (ElementSet{0, 2}));
}

TEST(DimensionTest, Strong) {
  Structure m = cherry();
  EXPECT_TRUE(is_strong(m.elements(), m, kTwoThirds));
  EXPECT_TRUE(is_strong({}, m, kTwoThirds));
  EXPECT_FALSE(is_strong({0, 1}, m, kTwoThirds));
}

TEST(DimensionTest, MembershipInK) {
  EXPECT_TRUE(is_in_K(Structure::graph(6), kHalf).member);
  KResult k4 = is_in_K(complete(4), AlphaSpec::exact(Rational(3, 4)));
  EXPECT_FALSE(k4.member);
  EXPECT_EQ(k4.violating, (ElementSet{0, 1, 2, 3}));
  EXPECT_TRUE(is_in_K(complete(3), kTwoThirds).member);
}

TEST(DimensionTest, ViolatingSubsetIsMinimal) {
  std::mt19937_64 rng(17);
  int failures = 0;
  for (int trial = 0; trial < 150; ++trial) {
    Structure s = testing::random_graph(9, 0.55, rng);
    AlphaSpec alpha = testing::random_alpha(rng);
    KResult k = is_in_K(s, alpha);
    EXPECT_EQ(k.member, oracle::is_in_K(s, alpha));
    if (k.member) continue;
    ++failures;
    Structure v = induced(s, k.violating);
    EXPECT_LT(sign(delta(v), alpha), 0);
    for (ElementId drop : k.violating) {
      EXPECT_TRUE(oracle::is_in_K(induced(s, set_difference(k.violating, {drop})), alpha));
    }
  }
  EXPECT_GT(failures, 10);
}

TEST(DimensionTest, DInIsTheMinimum) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Structure n = testing::random_mixed(9, 0.4, rng);
    AlphaSpec alpha = testing::random_alpha(rng);
    Rational beta = testing::random_beta(rng);
    ElementSet a = testing::random_subset(n.elements(), 0.3, rng);
    DInResult r = d_in(n, a, alpha, beta);
    EXPECT_TRUE(is_subset(a, r.minimizer));
    EXPECT_EQ(r.value, delta(induced(n, r.minimizer), beta));
    ElementSet rest = set_difference(n.elements(), a);
    for (std::uint32_t m = 0; m < (1u << rest.size()); ++m) {
      ElementSet s = a;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (m >> i & 1) s.push_back(rest[i]);
      }
      s = make_set(s);
      DimValue v = delta(induced(n, s), beta);
      Ordering o = cmp(r.value, v, alpha);
      EXPECT_NE(o, Ordering::GT);
      // Every other minimizer contains the returned one.
      if (o == Ordering::EQ) EXPECT_TRUE(is_subset(r.minimizer, s));
    }
  }
}

TEST(DimensionTest, StrongIsTransitive) {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Structure n = testing::random_graph(9, 0.35, rng);
    AlphaSpec alpha = testing::random_alpha(rng);
    ElementSet np = testing::random_subset(n.elements(), 0.7, rng);
    ElementSet m = testing::random_subset(np, 0.6, rng);
    Structure n_prime = induced(n, np);
    if (is_strong(m, n_prime, alpha) && is_strong(np, n, alpha)) {
      ++checked;
      EXPECT_TRUE(is_strong(m, n, alpha));
    }
  }
  EXPECT_GT(checked, 30);
}

TEST(DimensionTest, StrongRestrictsToSubstructures) {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Structure n = testing::random_graph(9, 0.35, rng);
    AlphaSpec alpha = testing::random_alpha(rng);
    ElementSet m = testing::random_subset(n.elements(), 0.5, rng);
    ElementSet np = testing::random_subset(n.elements(), 0.7, rng);
    if (!is_strong(m, n, alpha)) continue;
    ++checked;
    EXPECT_TRUE(is_strong(set_intersection(m, np), induced(n, np), alpha));
  }
  EXPECT_GT(checked, 30);
}

TEST(DimensionTest, FullAmalgamation) {
  std::mt19937_64 rng(37);
  int checked = 0;
  for (int trial = 0; trial < 600 && checked < 100; ++trial) {
    AlphaSpec alpha = testing::random_alpha(rng);
    Structure s = testing::random_graph(7, 0.35, rng);
    if (!is_in_K(s, alpha).member) continue;
    ElementSet a = testing::random_subset(s.elements(), 0.5, rng);
    if (!is_strong(a, s, alpha)) continue;
    // T: another K-member sharing exactly a with s.
    Structure t = testing::random_graph(6, 0.35, rng);
    std::map<ElementId, ElementId> ident;
    for (std::size_t i = 0; i < a.size() && i < 6; ++i) ident[static_cast<ElementId>(i)] = a[i];
    // Force t's base part to match s on a.
    Structure t_fixed = Structure::graph(0);
    for (ElementId id : t.elements()) t_fixed.add_element(id);
    for (const Instance& e : t.instances(0)) {
      if (!(ident.count(e[0]) && ident.count(e[1]))) t_fixed.add_edge(e[0], e[1]);
    }
    for (auto [k1, v1] : ident) {
      for (auto [k2, v2] : ident) {
        if (k1 < k2 && s.adjacent(v1, v2)) t_fixed.add_edge(k1, k2);
      }
    }
    if (ident.size() != a.size()) continue;
    if (!is_in_K(t_fixed, alpha).member) continue;
    Gluing g = glue(s, t_fixed, ident);
    ++checked;
    EXPECT_TRUE(is_in_K(g.result, alpha).member);
    ElementSet t_image;
    for (auto [from, to] : g.right_map) t_image.push_back(to);
    EXPECT_TRUE(is_strong(make_set(t_image), g.result, alpha));
  }
  EXPECT_GE(checked, 100);
}

TEST(DimensionTest, AxiomsHoldOnRandomGraphs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    Structure s = testing::random_graph(12, 0.3, rng);
    AlphaSpec alpha = testing::random_alpha(rng);
    AxiomReport r = verify_axioms(s, 40, alpha, 1, rng());
    EXPECT_TRUE(r.ok()) << (r.violations.empty() ? "" : r.violations.front());
    EXPECT_EQ(r.axiom1_ok, r.trials);
    EXPECT_EQ(r.identity_ok, r.trials);
  }
  // Mixed arities and a non-unit beta.
  for (int trial = 0; trial < 20; ++trial) {
    Structure s = testing::random_mixed(10, 0.3, rng);
    AxiomReport r = verify_axioms(s, 40, testing::random_alpha(rng), Rational(3, 2), rng());
    EXPECT_TRUE(r.ok()) << (r.violations.empty() ? "" : r.violations.front());
  }
}

TEST(DimensionTest, LatticeStep) {
  EXPECT_EQ(lattice_step(kTwoThirds, 1), Rational(1, 3));
  EXPECT_EQ(lattice_step(kTwoThirds, Rational(1, 2)), Rational(1, 6));
}

}  // namespace
}  // namespace predim
