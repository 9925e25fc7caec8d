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

#include "predim/structure.hpp"

#include <gtest/gtest.h>

#include "predim/dimension.hpp"
#include "predim/structure_io.hpp"
#include "test_util.hpp"

namespace predim {
namespace {

Structure triangle() { return Structure::graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

Structure star(int leaves) {
  Structure s = Structure::graph(leaves + 1);
  for (int i = 1; i <= leaves; ++i) s.add_edge(0, i);
  return s;
}

TEST(StructureTest, InstancesAreSetsOfDistinctElements) {
  Structure s = Structure::graph(3);
  s.add_edge(2, 1);
  s.add_edge(1, 2);
  EXPECT_EQ(s.instance_count(), 1u);
  EXPECT_TRUE(s.adjacent(1, 2));
  EXPECT_THROW(s.add_edge(1, 1), InvalidArgument);
  EXPECT_THROW(s.add_edge(1, 7), UnknownElement);
}

TEST(StructureTest, Induced) {
  EXPECT_EQ(induced(triangle(), {0, 1, 2}), triangle());
  Structure edge = induced(triangle(), {0, 2});
  EXPECT_EQ(edge.size(), 2u);
  EXPECT_EQ(edge.instance_count(), 1u);
  Structure point = induced(star(5), {0});
  EXPECT_EQ(point.size(), 1u);
  EXPECT_EQ(point.instance_count(), 0u);
  EXPECT_THROW(induced(triangle(), {0, 9}), UnknownElement);
}

TEST(StructureTest, FreeAmalgamAddsNoRelations) {
  Structure b = Structure::graph(0);
  b.add_element(0);
  b.add_element(1);
  b.add_edge(0, 1);
  Structure c = Structure::graph(0);
  c.add_element(0);
  c.add_element(2);
  c.add_edge(0, 2);
  Structure path = free_amalgam(b, c, {0});
  EXPECT_EQ(path.size(), 3u);
  EXPECT_TRUE(path.adjacent(0, 1));
  EXPECT_TRUE(path.adjacent(0, 2));
  EXPECT_FALSE(path.adjacent(1, 2));
  EXPECT_EQ(free_amalgam(b, b, b.elements()), b);
  // 3 vertices, 2 edges at alpha 1/2.
  EXPECT_EQ(delta(path).at(Rational(1, 2)), 2);
}

TEST(StructureTest, FreeAmalgamChecksTheBase) {
  Structure b = Structure::graph(2, {{0, 1}});
  Structure c = Structure::graph(3);
  EXPECT_THROW(free_amalgam(b, c, {0, 1}), BaseMismatch);
  EXPECT_THROW(free_amalgam(b, c, {0}), OverlapViolation);
}

TEST(StructureTest, GlueRenamesFreshElements) {
  Structure b = Structure::graph(2, {{0, 1}});
  Structure c = Structure::graph(3, {{0, 2}, {1, 2}});
  Gluing g = glue(b, c, {{0, 1}});
  EXPECT_EQ(g.result.size(), 4u);
  EXPECT_EQ(g.right_map.at(0), 1u);
  EXPECT_EQ(g.right_map.at(1), 2u);
  EXPECT_EQ(g.right_map.at(2), 3u);
  EXPECT_TRUE(g.result.adjacent(1, 3));
  EXPECT_TRUE(g.result.adjacent(2, 3));
  EXPECT_EQ(g.result.instance_count(), 3u);
  EXPECT_THROW(glue(b, c, {{0, 0}, {1, 1}}), BaseMismatch);
}

TEST(StructureTest, EmbeddingsOver) {
  Structure point = Structure::graph(1);
  EXPECT_EQ(embeddings_over(point, {}, Structure::graph(5)).size(), 5u);

  Structure edge = Structure::graph(2, {{0, 1}});
  std::vector<Embedding> leaves = embeddings_over(edge, {0}, star(5));
  ASSERT_EQ(leaves.size(), 5u);
  for (std::size_t i = 0; i < leaves.size(); ++i) EXPECT_EQ(leaves[i].map.at(1), i + 1);

  Structure c4 = Structure::graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_TRUE(embeddings_over(triangle(), {}, c4).empty());
}

TEST(StructureTest, EmbeddingsAreInduced) {
  // A non-edge never maps onto an edge.
  Structure two = Structure::graph(2);
  EXPECT_TRUE(embeddings_over(two, {}, triangle()).empty());
  EXPECT_EQ(embeddings_over(two, {}, Structure::graph(3, {{0, 1}})).size(), 4u);
}

TEST(StructureTest, IsomorphicOver) {
  EXPECT_TRUE(isomorphic_over(triangle(), triangle(), {0}));
  Structure e1 = Structure::graph(2, {{0, 1}});
  Structure e2 = Structure::graph(0);
  e2.add_element(0);
  e2.add_element(5);
  e2.add_edge(0, 5);
  Structure joined = free_amalgam(e1, e2, {0});
  EXPECT_TRUE(isomorphic_over(induced(joined, {0, 1}), e1, {0}));
  EXPECT_FALSE(isomorphic_over(e1, Structure::graph(2), {}));
}

TEST(StructureTest, GraphFastPathAgreesWithGeneric) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Structure m = testing::random_graph(7, 0.4, rng);
    Structure b = testing::random_graph(4, 0.5, rng);
    ElementSet a = testing::random_subset({0, 1, 2}, 0.4, rng);
    // Make the base agree with m so that embeddings can exist.
    Structure base_m = induced(m, a);
    Structure bb = Structure::graph(0);
    for (ElementId id : b.elements()) bb.add_element(id);
    for (const Instance& e : b.instances(0)) {
      if (!(contains(a, e[0]) && contains(a, e[1]))) bb.add_edge(e[0], e[1]);
    }
    for (const Instance& e : base_m.instances(0)) bb.add_edge(e[0], e[1]);
    EXPECT_EQ(detail::embeddings_graph(bb, a, m), detail::embeddings_generic(bb, a, m));
  }
}

TEST(StructureTest, PropertiesOnRandomStructures) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Structure s = testing::random_mixed(8, 0.35, rng);
    ElementSet x = testing::random_subset(s.elements(), 0.6, rng);
    EXPECT_EQ(induced(induced(s, x), x), induced(s, x));

    // Split into two overlapping sides and amalgamate back freely.
    ElementSet a = testing::random_subset(s.elements(), 0.3, rng);
    ElementSet left = a, right = a;
    for (ElementId id : set_difference(s.elements(), a)) {
      (rng() & 1 ? left : right).push_back(id);
    }
    left = make_set(left);
    right = make_set(right);
    Structure b = induced(s, left), c = induced(s, right);
    Structure bc = free_amalgam(b, c, a);
    EXPECT_EQ(bc, free_amalgam(c, b, a));
    EXPECT_EQ(bc.instance_count(),
              b.instance_count() + c.instance_count() - induced(b, a).instance_count());
    EXPECT_EQ(delta(bc), delta(b) + delta(c) - delta(induced(s, a)));

    // Embedding counts do not depend on names.
    std::map<ElementId, ElementId> rename;
    for (ElementId id : s.elements()) rename[id] = 100 + 3 * (7 - id);
    Structure sr = relabel(s, rename);
    Structure pattern = induced(s, {0, 1, 2});
    Structure pattern_r = relabel(pattern, {{0, 0}, {1, 1}, {2, 2}});
    EXPECT_EQ(embeddings_over(pattern, {}, s).size(), embeddings_over(pattern_r, {}, sr).size());
  }
}

TEST(StructureIoTest, JsonRoundTripIsByteStable) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Structure s = testing::random_mixed(6, 0.4, rng);
    std::string text = canonical(s);
    Structure back = structure_from_json(nlohmann::json::parse(text));
    EXPECT_EQ(back, s);
    EXPECT_EQ(canonical(back), text);
  }
  EXPECT_EQ(canonical(Structure::graph(2, {{1, 0}})),
            R"({"elements":[0,1],"instances":{"E":[[0,1]]},"signature":{"E":2}})");
}

TEST(StructureIoTest, RejectsBadJson) {
  auto parse = [](const char* text) { return structure_from_json(nlohmann::json::parse(text)); };
  EXPECT_THROW(parse(R"({"elements":[0],"instances":{"E":[[0,0]]}})"), InvalidArgument);
  EXPECT_THROW(parse(R"({"elements":[0],"instances":{"E":[[0,1]]}})"), UnknownElement);
  EXPECT_THROW(parse(R"({"elements":[0,1,2],"instances":{"E":[[0,1,2]]}})"), InvalidArgument);
  EXPECT_THROW(parse(R"({"elements":"x"})"), InvalidArgument);
  EXPECT_THROW(parse(R"({"signature":{"U":1},"elements":[]})"), InvalidArgument);
}

TEST(StructureIoTest, Dot) {
  std::string dot = to_dot(triangle(), {0});
  EXPECT_NE(dot.find("0 [shape=box]"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2"), std::string::npos);
}

}  // namespace
}  // namespace predim
