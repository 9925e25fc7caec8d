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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "predim/rational.hpp"
#include "predim/structure.hpp"

namespace predim {

// G(n, p) with p = coeff * n^-alpha. Alpha here is a plain rational; the
// sampler has no use for intervals.
struct SampleSpec {
  std::size_t n = 1;
  Rational alpha = 0;
  Rational coeff = 1;
  std::uint64_t seed = 0;
};

// Throws ProbabilityOverflow when p > 1 (decided exactly), InvalidArgument
// for n = 0 or a negative coefficient.
double edge_probability(const SampleSpec& spec);

// Vertices 0..n-1. Pair {i, j} is an edge iff a hash of (seed, pair index)
// falls below p, so the graph does not depend on iteration order.
Structure sample(const SampleSpec& spec);

// Number of vertex subsets of m whose induced graph contains a copy of h,
// not necessarily induced. h has at most 6 vertices.
std::uint64_t census(const Structure& m, const Structure& h, Budget* budget = nullptr);

// C(n, v) * (v! / |Aut h|) * p^e: expected number of copies of h.
double expected_count(const SampleSpec& spec, const Structure& h);

// K<n>, P<n> (path on n vertices), C<n> (cycle), E<n> (n isolated points);
// "edge" and "triangle" as aliases.
Structure named_pattern(std::string_view name);

}  // namespace predim
