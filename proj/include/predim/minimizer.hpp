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

#include <cstdint>
#include <vector>

#include "predim/alpha.hpp"
#include "predim/hypergraph.hpp"

namespace predim {

// Engines for minimizing delta over the sets S with base ⊆ S ⊆ allowed.
//
// The minimizers of delta over such an interval form a lattice (delta is
// submodular), so the inclusion-minimal minimizer is unique; every engine
// returns it. In interval mode the minimizer must be the same at both ends
// of the alpha interval, else InsufficientPrecision.
enum class Strategy {
  automatic,      // decomposition, falling back to flow on large inputs
  decomposition,  // component splitting, twin merging, branch and bound
  flow,           // max-closure via Dinic max-flow
  exhaustive,     // plain enumeration of all subsets (<= 30 free elements)
};

const char* to_string(Strategy s);
Strategy parse_strategy(const std::string& name);

struct Minimum {
  std::vector<char> mask;  // the minimizer, as a dense mask
  Affine value;            // delta(minimizer) - delta(base)
};

struct MinimizeOptions {
  Strategy strategy = Strategy::automatic;
  Budget* budget = nullptr;
  // Route d, strongness, closure and primitivity through the enumeration
  // oracle instead of the engines (small structures only).
  bool oracle = false;
};

Minimum minimize(const Hypergraph& h, const Weights& w, const std::vector<char>& base,
                 const std::vector<char>& allowed, const MinimizeOptions& options = {});

// Relative value delta(mask) - delta(base) computed directly.
Affine relative_value(const Hypergraph& h, const std::vector<char>& base,
                      const std::vector<char>& mask);

}  // namespace predim
