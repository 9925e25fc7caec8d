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

#include "predim/checks.hpp"

#include <gtest/gtest.h>

namespace predim {
namespace {

TEST(SuiteTest, AllPass) {
  for (const SuiteReport& r : {check_axioms(200, 3), check_closure(30, 3),
                               check_amalgamation(40, 3), check_identities(20, 3)}) {
    EXPECT_TRUE(r.ok()) << r.name << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_EQ(r.passed, r.trials);
  }
}

TEST(SuiteTest, Deterministic) {
  EXPECT_EQ(to_json(check_axioms(50, 9)).dump(), to_json(check_axioms(50, 9)).dump());
  const SuiteReport r = check_axioms(300, 9);
  EXPECT_EQ(r.count("axiom1_ok"), 300u);
  EXPECT_GT(r.count("axiom2_negative"), 0u);
  EXPECT_GT(r.count("axiom3_premise"), 0u);
  EXPECT_EQ(r.count("missing"), 0u);
}

TEST(SuiteTest, RandomAlpha) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const AlphaSpec a = random_alpha(i, 7);
    ASSERT_TRUE(a.is_exact());
    EXPECT_GT(a.value(), 0);
    EXPECT_LT(a.value(), 1);
    EXPECT_LE(boost::multiprecision::denominator(a.value()), 7);
  }
}

}  // namespace
}  // namespace predim
