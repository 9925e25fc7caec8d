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
#include <string>

#include "predim/dimension.hpp"

namespace predim {

struct ClosureResult {
  ElementSet closure;
  bool converged = false;
  int rounds = 0;
  bool budget_hit = false;
};

// No A' with a ⊆ A' ⊊ elements(b) is strong in b.
bool is_intrinsic(const ElementSet& a, const Structure& b, const AlphaSpec& alpha,
                  const Rational& beta = 1, const MinimizeOptions& options = {});

// Union of the intrinsic extensions B of a in m with |B - a| < level.
// Candidates are enumerated; options.budget counts them.
ElementSet icl_m(const Structure& m, const ElementSet& a, int level, const AlphaSpec& alpha,
                 const Rational& beta = 1, const MinimizeOptions& options = {});

// Intrinsic closure. The engine path returns the least strong superset of a,
// which is the union of all intrinsic extensions, in a single round; with
// options.oracle the closure is computed by ascending-level rounds.
ClosureResult icl(const Structure& m, const ElementSet& a, const AlphaSpec& alpha,
                  const Rational& beta = 1, const MinimizeOptions& options = {});

// b strong in c with no strictly intermediate strong set. Throws NotStrong.
bool is_primitive(const ElementSet& b, const Structure& c, const AlphaSpec& alpha,
                  const Rational& beta = 1, const MinimizeOptions& options = {});

// delta(b/a) < 0 and delta(b/a) < delta(B'/a) for all a ⊆ B' ⊊ elements(b).
bool is_minimal_pair(const ElementSet& a, const Structure& b, const AlphaSpec& alpha,
                     const Rational& beta = 1, const MinimizeOptions& options = {});

struct CopyCount {
  std::size_t chi = 0;       // distinct copies of the pattern over a
  std::size_t chi_star = 0;  // largest family of copies disjoint over a
  std::size_t greedy = 0;    // greedy lower bound for chi_star
  bool budget_hit = false;   // chi_star is then only a verified lower bound
};

// Copies of `pattern` (a structure containing a) over a in m.
CopyCount chi(const Structure& m, const Structure& pattern, const ElementSet& a,
              Budget* budget = nullptr);

struct IndependenceCertificate {
  bool independent = false;
  bool dimension_clause = false;  // d(a/c) = d(a/cb)
  bool closure_clause = false;    // icl(ac) ∩ icl(bc) ⊆ icl(c)
  DimValue d_over_c;
  DimValue d_over_cb;
  ElementSet stray;  // elements of icl(ac) ∩ icl(bc) outside icl(c)
};

// d-independence of a and b over c, relative to the ambient m.
IndependenceCertificate d_independent(const Structure& m, const ElementSet& a,
                                      const ElementSet& b, const ElementSet& c,
                                      const AlphaSpec& alpha, const Rational& beta = 1,
                                      const MinimizeOptions& options = {});

}  // namespace predim
