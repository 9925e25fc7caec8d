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

#include "predim/dimension.hpp"

// Reference implementations by direct enumeration of subsets. They share
// no code with the minimization engines and exist to cross-check them; all
// are exponential and limited to small structures.
namespace predim::oracle {

inline constexpr int kMaxElements = 24;

DInResult d_in(const Structure& n, const ElementSet& a, const AlphaSpec& alpha,
               const Rational& beta = 1);

bool is_strong(const ElementSet& a, const Structure& n, const AlphaSpec& alpha,
               const Rational& beta = 1);

bool is_in_K(const Structure& s, const AlphaSpec& alpha, const Rational& beta = 1);

// Every strong subset of n, in increasing bitmask order over the sorted
// element list.
std::vector<ElementSet> strong_subsets(const Structure& n, const AlphaSpec& alpha,
                                       const Rational& beta = 1);

bool is_intrinsic(const ElementSet& a, const Structure& b, const AlphaSpec& alpha,
                  const Rational& beta = 1);

// Closure by the union-of-intrinsic-extensions definition, rounds of
// ascending m with a restart after any growth.
ElementSet icl_definitional(const Structure& m, const ElementSet& a, const AlphaSpec& alpha,
                            const Rational& beta = 1, int* rounds = nullptr);

// Intersection of all strong subsets containing a.
ElementSet icl_intersection(const Structure& m, const ElementSet& a, const AlphaSpec& alpha,
                            const Rational& beta = 1);

// Strong and no strictly intermediate strong set. Throws NotStrong.
bool is_primitive(const ElementSet& b, const Structure& c, const AlphaSpec& alpha,
                  const Rational& beta = 1);

// delta(A') > delta(S) for every A' with base strictly inside A' strictly
// inside S.
bool pointed_minimal(const Structure& s, const ElementSet& base, const AlphaSpec& alpha,
                     const Rational& beta = 1);

// The four clauses of the pointed class, by enumeration.
bool in_pointed_class(const Structure& s, ElementId a, ElementId b, ElementId e,
                      const AlphaSpec& alpha, const Rational& beta = 1);

}  // namespace predim::oracle
