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

#include "predim/generic.hpp"

#include <gtest/gtest.h>

namespace predim {
namespace {

const AlphaSpec kFiveEighths = AlphaSpec::exact(Rational(5, 8));

TEST(CatalogTest, SmallSizes) {
  // |B| <= 2 at 5/8: point over nothing, edge over nothing, pair over nothing,
  // point over point, edge over point.
  const auto cat = extension_catalog(2, kFiveEighths, 1);
  EXPECT_EQ(cat.size(), 5u);
  for (const ExtensionType& t : cat) {
    EXPECT_TRUE(is_in_K(t.b, kFiveEighths).member);
    EXPECT_TRUE(is_strong(t.a(), t.b, kFiveEighths));
  }
  // A triangle over an edge is intrinsic once 1 - 2a < 0.
  const auto intr = intrinsic_catalog(3, kFiveEighths, 1);
  bool triangle = false;
  for (const ExtensionType& t : intr) {
    if (t.a_size == 2 && t.b.size() == 3 && t.b.instance_count() == 3) triangle = true;
  }
  EXPECT_TRUE(triangle);
  EXPECT_THROW(extension_catalog(0, kFiveEighths, 1), InvalidArgument);
}

TEST(GenericTest, EmptyBudget) {
  GenericApprox g = build_generic(kFiveEighths, 1, 0, 3, 42);
  EXPECT_TRUE(g.structure().empty());
  EXPECT_EQ(g.stage(), 0u);
  EXPECT_FALSE(g.exhausted());
  EXPECT_THROW(build_generic(kFiveEighths, 1, 5, 0, 1), InvalidArgument);
}

TEST(GenericTest, SizeOneGivesIsolatedPoint) {
  GenericApprox g = build_generic(kFiveEighths, 1, 10, 1, 3);
  EXPECT_TRUE(g.exhausted());
  ASSERT_EQ(g.structure().size(), 1u);
  EXPECT_TRUE(is_strong({0}, g.structure(), kFiveEighths));
}

TEST(GenericTest, StagesStayInK) {
  GenericApprox g(kFiveEighths, 1, 3, 42);
  for (int i = 0; i < 40; ++i) {
    g.run(5);
    ASSERT_TRUE(is_in_K(g.structure(), kFiveEighths).member) << "stage " << g.stage();
  }
  EXPECT_EQ(g.stage_sizes().size(), g.stage() + 1);
  EXPECT_EQ(g.stage_sizes().back(), g.structure().size());
}

TEST(GenericTest, Audits) {
  GenericApprox g = build_generic(kFiveEighths, 1, 500, 3, 42);
  EXPECT_EQ(g.stage(), 500u);
  const ExtensionAudit ext = audit_extension(g);
  EXPECT_TRUE(ext.ok());
  EXPECT_EQ(ext.scheduled, 500u);
  EXPECT_EQ(ext.scheduled_ok, 500u);
  EXPECT_TRUE(ext.empty_strong);
  const ClosureAudit cl = audit_finite_closures(g, 50, 9);
  EXPECT_TRUE(cl.ok()) << (cl.failures.empty() ? "" : cl.failures.front());
  EXPECT_EQ(cl.closures_ok, 50u);
  EXPECT_EQ(cl.stages_ok, cl.stages_checked);
}

TEST(GenericTest, PeekDoesNotConsume) {
  GenericApprox g = build_generic(kFiveEighths, 1, 20, 3, 5);
  const auto a = g.peek(10);
  const auto b = g.peek(10);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].type, b[i].type);
    EXPECT_EQ(a[i].image, b[i].image);
  }
  g.run(1);
  EXPECT_EQ(g.completed().back().obligation.image, a.front().image);
}

TEST(GenericTest, Deterministic) {
  const auto one = to_json(build_generic(kFiveEighths, 1, 500, 3, 42)).dump();
  const auto two = to_json(build_generic(kFiveEighths, 1, 500, 3, 42)).dump();
  EXPECT_EQ(one, two);
  const auto other = to_json(build_generic(kFiveEighths, 1, 500, 3, 43)).dump();
  EXPECT_NE(one, other);
}

TEST(GenericTest, ChiIsRecorded) {
  GenericApprox g = build_generic(kFiveEighths, 1, 200, 3, 1);
  const auto points = chi_growth(g, 4, 10);
  EXPECT_FALSE(points.empty());
  for (const ChiPoint& p : points) EXPECT_LE(p.images, 10u);
}

}  // namespace
}  // namespace predim
