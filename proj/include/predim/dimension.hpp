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

#include "predim/alpha.hpp"
#include "predim/minimizer.hpp"
#include "predim/structure.hpp"

namespace predim {

// Number of relation instances, counted with multiplicity across symbols.
std::size_t e_count(const Structure& s);

// Instances inside a ∪ b meeting both a and b. Throws SetsNotDisjoint.
std::size_t e_cross(const Structure& s, const ElementSet& a, const ElementSet& b);

// Instances inside a ∪ b ∪ c meeting both a and c.
std::size_t e_cross3(const Structure& s, const ElementSet& a, const ElementSet& b,
                     const ElementSet& c);

// beta*|S| - alpha*e(S).
DimValue delta(const Structure& s, const Rational& beta = 1);

// delta(a ∪ b) - delta(b), both induced in s.
DimValue delta_rel(const Structure& s, const ElementSet& a, const ElementSet& b,
                   const Rational& beta = 1);

struct DInResult {
  DimValue value;
  // The inclusion-minimal set attaining the minimum.
  ElementSet minimizer;
};

// min { delta(S) : a ⊆ S ⊆ elements(n) }.
DInResult d_in(const Structure& n, const ElementSet& a, const AlphaSpec& alpha,
               const Rational& beta = 1, const MinimizeOptions& options = {});

// d_n(a ∪ b) - d_n(b).
DimValue d_rel(const Structure& n, const ElementSet& a, const ElementSet& b,
               const AlphaSpec& alpha, const Rational& beta = 1,
               const MinimizeOptions& options = {});

// The least strong subset of n containing a (the minimal minimizer above).
ElementSet strong_hull(const Structure& n, const ElementSet& a, const AlphaSpec& alpha,
                       const Rational& beta = 1, const MinimizeOptions& options = {});

bool is_strong(const ElementSet& a, const Structure& n, const AlphaSpec& alpha,
               const Rational& beta = 1, const MinimizeOptions& options = {});

struct KResult {
  bool member = true;
  // On failure: a subset with negative delta all of whose proper subsets
  // have delta >= 0.
  ElementSet violating;
};

KResult is_in_K(const Structure& s, const AlphaSpec& alpha, const Rational& beta = 1,
                const MinimizeOptions& options = {});

// Lattice step for exact alpha: every delta value is a multiple of it.
Rational lattice_step(const AlphaSpec& alpha, const Rational& beta);

struct AxiomReport {
  std::size_t trials = 0;
  std::size_t axiom1_ok = 0;
  std::size_t axiom2_checked = 0;  // triples with delta(A/B) < 0
  std::size_t axiom2_ok = 0;
  std::size_t axiom3_premise = 0;  // triples with gap < epsilon
  std::size_t axiom3_ok = 0;
  std::size_t identity_ok = 0;     // gap identities hold exactly
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Samples `trials` random disjoint triples (A, B, C) of s and checks the
// three axioms plus the exact gap identities
//   delta(C/A) - delta(C/AB) = alpha * e(C, A, B)
//   delta(A/B) - delta(A/BC) = alpha * e(A, B, C).
AxiomReport verify_axioms(const Structure& s, std::size_t trials, const AlphaSpec& alpha,
                          const Rational& beta, std::uint64_t seed);

}  // namespace predim
