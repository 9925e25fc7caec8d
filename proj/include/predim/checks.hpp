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
#include <string>
#include <vector>

#include "json.hpp"
#include "predim/closure.hpp"

namespace predim {

// Outcome of one randomized property suite. A trial passes when every
// check in it passes; `counts` holds suite-specific tallies.
struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::vector<std::pair<std::string, std::size_t>> counts;
  std::vector<std::string> failures;  // first few only

  bool ok() const { return passed == trials; }
  std::size_t count(const std::string& key) const;
};

nlohmann::json to_json(const SuiteReport& r);

// Random disjoint triples in random graphs with |M| <= 14 and random exact
// alpha = p/q; axioms 1-3 and the gap identities.
SuiteReport check_axioms(std::size_t trials, std::uint64_t seed);

// Random (M, A), |M| <= 12, M in K: icl idempotent, equal to the
// intersection of strong substructures over A and to the definitional
// closure, and strong in M.
SuiteReport check_closure(std::size_t trials, std::uint64_t seed,
                          const MinimizeOptions& options = {});

// Random A <= B and A ⊆ C in K: the free amalgam D is in K, C <= D, no
// cross instances, and delta(D) = delta(B) + delta(C) - delta(A).
SuiteReport check_amalgamation(std::size_t trials, std::uint64_t seed,
                               const MinimizeOptions& options = {});

// Random certificate pairs: copies and chain identities recomputed from the
// raw structures, and the one-point bounds on chains with sum in [-1, 0).
SuiteReport check_identities(std::size_t trials, std::uint64_t seed,
                             const MinimizeOptions& options = {});

// Random exact alpha = p/q with 2 <= q <= max_den, 0 < alpha < 1.
AlphaSpec random_alpha(std::uint64_t draw, int max_den = 12);

}  // namespace predim
