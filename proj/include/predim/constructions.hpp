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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "predim/closure.hpp"

namespace predim {

struct PointedStructure {
  Structure s;
  ElementId a = 0;
  ElementId b = 1;
  ElementId e = 2;

  ElementSet base() const { return make_set({a, b}); }
};

// Membership in the pointed class, clause by clause. Clause 3 ranges over
// A' with B strictly inside A' strictly inside A.
struct ClassReport {
  bool member = false;
  bool in_k = false;             // clause 1
  bool discrete = false;         // clause 2
  bool minimal = false;          // clause 3
  bool in_range = false;         // clause 4: -1 < delta(A/B) <= 0
  int failed_clause = 0;         // lowest failing clause, 0 if none
  bool observation_holds = true;  // clauses 2-4 imply clause 1
  DimValue rel;                  // delta(A/B)
  ElementSet witness;            // offending A' for clause 3, or K violation
  std::string detail;
};

ClassReport is_in_A_class(const PointedStructure& p, const AlphaSpec& alpha,
                          const Rational& beta = 1, const MinimizeOptions& options = {});

struct AcceptabilityInterval {
  int n = 1;
  int k = 1;
  Rational lower;
  Rational upper;
};

AcceptabilityInterval acceptability(int n, int k);

// b1 ~ a,e and b2 ~ b,e.
PointedStructure case1_structure();
// b1 ~ a,b,e and b2 ~ b,e.
PointedStructure case2_structure();
// n points joined to a, b, e and k points joined to every one of those n.
// k = 0 is allowed.
PointedStructure a_nk_structure(int n, int k);

struct OnePointBounds {
  DimValue rel_a;  // delta(A*/a1)
  DimValue rel_b;  // delta(A*/b2)
  bool holds = false;
};

struct XCertificate {
  enum class Kind { seed, copies, chain };

  PointedStructure p;
  DimValue beta;
  Kind kind = Kind::seed;
  std::string label;  // seed family, e.g. "case1" or "A(3,1)"
  int k = 1;
  std::shared_ptr<const XCertificate> left;
  std::shared_ptr<const XCertificate> right;
  bool checked = false;  // membership was run
  bool member = false;
  std::optional<OnePointBounds> facts;

  std::size_t size() const { return p.s.size(); }
};

using CertPtr = std::shared_ptr<const XCertificate>;

const char* to_string(XCertificate::Kind kind);

// Recomputes delta(S/{a,b}) at every node of the trace.
bool revalidate(const XCertificate& x, const Rational& beta = 1);

nlohmann::json trace_json(const XCertificate& x);

CertPtr make_seed(PointedStructure p, std::string label, const AlphaSpec& alpha,
                  const Rational& beta = 1, const MinimizeOptions& options = {});

CertPtr find_seed(const AlphaSpec& alpha, const Rational& beta = 1,
                  const MinimizeOptions& options = {});

// k copies of x freely amalgamated over {a,b}. Throws XRangeViolation when
// k*beta <= -1 unless allow_out_of_range is set.
CertPtr amalg_copies(const CertPtr& x, int k, const AlphaSpec& alpha,
                     const Rational& beta = 1, bool allow_out_of_range = false,
                     const MinimizeOptions& options = {});

// Identifies b of x1 with a of x2. The result is (a1, b2, e1).
CertPtr chain(const CertPtr& x1, const CertPtr& x2, const AlphaSpec& alpha,
              const Rational& beta = 1, const MinimizeOptions& options = {});

struct SearchBudget {
  std::size_t max_elements = 96;
  std::size_t max_nodes = 4000;
  int seed_size = 12;  // family seeds up to this many elements join the pool
};

// Accepts a candidate; may inspect the structure, not just beta.
using XTarget = std::function<bool(const XCertificate&)>;

// Best-first search over values reachable by copies and chains, smallest
// structure first. Throws BudgetExceeded when the budget runs out.
CertPtr search_X(const AlphaSpec& alpha, const XTarget& target, const SearchBudget& budget,
                 const Rational& beta = 1, const MinimizeOptions& options = {});

CertPtr approach_zero(const AlphaSpec& alpha, int m, const SearchBudget& budget = {},
                      const Rational& beta = 1, const MinimizeOptions& options = {});

// A value strictly inside (gamma, upper). Throws Unachievable when alpha is
// rational and the interval misses the lattice of achievable values.
CertPtr dense_find(const AlphaSpec& alpha, const Rational& gamma, const Rational& upper,
                   const SearchBudget& budget = {}, const Rational& beta = 1,
                   const MinimizeOptions& options = {});

struct CnResult {
  Structure c;
  ElementId x = 0;
  ElementId y = 1;
  ElementId point = 2;
  DimValue rel;  // delta(C/{x,y})
  std::string route;  // "zero" or "chain"
  CertPtr cert;
  bool discrete = false;
  bool range_ok = false;
  bool primitive = false;
  bool primitive_exhaustive = false;  // cross-checked by enumeration
  DimValue rel_x;  // delta(C/x)
  DimValue rel_y;  // delta(C/y)
  DimValue d_point_x;  // d(c/x) inside C
  DimValue d_point_y;  // d(c/y) inside C

  bool ok() const { return discrete && range_ok && primitive; }
};

enum class CnRoute {
  automatic,  // a delta-0 element when one is reachable, else the chain
  chain,      // always A1 * A2, so delta(C/B) > 0
};

CnResult build_Cn(const AlphaSpec& alpha, int n, const SearchBudget& budget = {},
                  const Rational& beta = 1, const MinimizeOptions& options = {},
                  CnRoute route = CnRoute::automatic);

// A block found by enumerating graphs with up to `max_extra` points besides
// x, y, c that also has d(c/x) >= 1 and d(c/y) >= 1 inside the block. Blocks
// built by chaining never do: the first link holds x and c with
// delta = 2 + beta_1 < 2.
std::optional<CnResult> search_block(const AlphaSpec& alpha, int n, int max_extra = 4,
                                     const Rational& beta = 1,
                                     const MinimizeOptions& options = {});

struct WitnessReport {
  Structure w;
  ElementId x = 0;
  ElementId y = 1;
  ElementId c = 2;
  std::vector<DimValue> block_rel;  // delta(C_n/B_n) per block
  std::vector<std::size_t> block_size;
  std::vector<std::string> block_route;
  std::vector<CnResult> blocks;
  DimValue d_c_over_b;
  DimValue d_c_over_x;
  DimValue d_c_over_y;
  bool nonnegative = false;  // every block_rel >= 0
};

// Blocks C_1..C_N freely amalgamated over {x, y}; c is the point of C_N.
// Each block comes from search_block when one exists, else build_Cn.
WitnessReport rank0_witness(const AlphaSpec& alpha, int blocks, const SearchBudget& budget = {},
                            const Rational& beta = 1, const MinimizeOptions& options = {});

// The blocks glued over {x, y, c}: every block's point identified with c.
// delta(W/{x,y}) = sum of delta(C_n/B) - (N - 1).
Structure glue_over_point(const std::vector<CnResult>& blocks);

struct DidipReport {
  Structure w;
  ElementId c = 0;
  std::vector<ElementSet> bases;      // B_n = {x_n, y_n}
  std::vector<DimValue> block_rel;    // delta(C_n/B_n)
  DimValue d_c_over_all;              // d(c / union of all B_n)
  std::vector<DimValue> d_c_prefix;   // d(c / B_0 .. B_{m-1}), m = 1..N
};

// N disjoint base pairs; block n sits over B_n and all blocks share c.
// Blocks take the chain route when it succeeds, so that delta(C_n/B_n) > 0.
DidipReport didip_witness(const AlphaSpec& alpha, int blocks, const SearchBudget& budget = {},
                          const Rational& beta = 1, const MinimizeOptions& options = {});

// d(x/y) = d(x u y) - d(y) in s.
DimValue d_over(const Structure& s, const ElementSet& x, const ElementSet& y,
                const AlphaSpec& alpha, const Rational& beta = 1,
                const MinimizeOptions& options = {});

}  // namespace predim
