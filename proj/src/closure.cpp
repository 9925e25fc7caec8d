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

#include "predim/closure.hpp"

#include <algorithm>

#include "predim/oracle.hpp"

namespace predim {

bool is_intrinsic(const ElementSet& a, const Structure& b, const AlphaSpec& alpha,
                  const Rational& beta, const MinimizeOptions& options) {
  require_elements(b, a);
  if (options.oracle) return oracle::is_intrinsic(a, b, alpha, beta);
  return strong_hull(b, a, alpha, beta, options) == b.elements();
}

ElementSet icl_m(const Structure& m, const ElementSet& a, int level, const AlphaSpec& alpha,
                 const Rational& beta, const MinimizeOptions& options) {
  require_elements(m, a);
  // Every intrinsic extension of a lies inside the least strong superset.
  const ElementSet hull =
      options.oracle ? oracle::icl_intersection(m, a, alpha, beta)
                     : strong_hull(m, a, alpha, beta, options);
  const ElementSet extra = set_difference(hull, a);
  ElementSet result = a;
  const int max_size = std::min<int>(level - 1, static_cast<int>(extra.size()));
  std::vector<int> pick;
  MinimizeOptions inner = options;
  inner.budget = nullptr;
  // Subsets of `extra` by increasing size, lexicographic within a size.
  for (int size = 1; size <= max_size; ++size) {
    pick.assign(size, 0);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      if (options.budget) options.budget->charge();
      ElementSet b = a;
      for (int i : pick) b.push_back(extra[i]);
      b = make_set(b);
      if (!is_subset(b, result) && is_intrinsic(a, induced(m, b), alpha, beta, inner)) {
        result = set_union(result, b);
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == static_cast<int>(extra.size()) - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return result;
}

ClosureResult icl(const Structure& m, const ElementSet& a, const AlphaSpec& alpha,
                  const Rational& beta, const MinimizeOptions& options) {
  require_elements(m, a);
  ClosureResult r;
  try {
    if (options.oracle) {
      r.closure = oracle::icl_definitional(m, a, alpha, beta, &r.rounds);
    } else {
      r.closure = strong_hull(m, a, alpha, beta, options);
      r.rounds = 1;
    }
    r.converged = true;
  } catch (const BudgetExceeded&) {
    r.closure = a;
    r.budget_hit = true;
  }
  return r;
}

bool is_primitive(const ElementSet& b, const Structure& c, const AlphaSpec& alpha,
                  const Rational& beta, const MinimizeOptions& options) {
  require_elements(c, b);
  if (options.oracle) return oracle::is_primitive(b, c, alpha, beta);
  if (!is_strong(b, c, alpha, beta, options)) {
    throw NotStrong("base is not strong in the extension");
  }
  // An intermediate strong set exists iff the least strong superset of
  // b + x falls short of c for some x.
  for (ElementId x : set_difference(c.elements(), b)) {
    ElementSet bx = set_union(b, {x});
    if (strong_hull(c, bx, alpha, beta, options) != c.elements()) return false;
  }
  return true;
}

bool is_minimal_pair(const ElementSet& a, const Structure& b, const AlphaSpec& alpha,
                     const Rational& beta, const MinimizeOptions& options) {
  require_elements(b, a);
  if (sign(delta_rel(b, b.elements(), a, beta), alpha) >= 0) return false;
  if (options.oracle) {
    const ElementSet rest = set_difference(b.elements(), a);
    const DimValue whole = delta(b, beta);
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << rest.size()); ++mask) {
      ElementSet s = a;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (mask >> i & 1) s.push_back(rest[i]);
      }
      if (cmp(whole, delta(induced(b, make_set(s)), beta), alpha) != Ordering::LT) return false;
    }
    return true;
  }
  // The whole set must be the unique minimizer over a: the inclusion-minimal
  // minimizer is then the whole set.
  return d_in(b, a, alpha, beta, options).minimizer == b.elements();
}

CopyCount chi(const Structure& m, const Structure& pattern, const ElementSet& a,
              Budget* budget) {
  CopyCount out;
  std::vector<ElementSet> copies;
  for (const Embedding& e : embeddings_over(pattern, a, m, budget)) {
    copies.push_back(set_difference(e.image(), a));
  }
  std::sort(copies.begin(), copies.end());
  copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
  out.chi = copies.size();
  if (copies.empty()) return out;

  // Greedy in order.
  {
    ElementSet used;
    for (const ElementSet& c : copies) {
      if (set_intersection(used, c).empty()) {
        ++out.greedy;
        used = set_union(used, c);
      }
    }
  }
  // Exact maximum packing by branch and bound.
  std::size_t best = out.greedy;
  ElementSet used;
  auto rec = [&](auto&& self, std::size_t from, std::size_t taken) -> void {
    if (budget) budget->charge();
    if (taken > best) best = taken;
    if (taken + (copies.size() - from) <= best) return;
    for (std::size_t i = from; i < copies.size(); ++i) {
      if (taken + (copies.size() - i) <= best) return;
      if (!set_intersection(used, copies[i]).empty()) continue;
      ElementSet saved = used;
      used = set_union(used, copies[i]);
      self(self, i + 1, taken + 1);
      used = std::move(saved);
    }
  };
  try {
    rec(rec, 0, 0);
  } catch (const BudgetExceeded&) {
    out.budget_hit = true;
  }
  out.chi_star = best;
  return out;
}

IndependenceCertificate d_independent(const Structure& m, const ElementSet& a,
                                      const ElementSet& b, const ElementSet& c,
                                      const AlphaSpec& alpha, const Rational& beta,
                                      const MinimizeOptions& options) {
  IndependenceCertificate cert;
  cert.d_over_c = d_rel(m, a, c, alpha, beta, options);
  cert.d_over_cb = d_rel(m, a, set_union(c, b), alpha, beta, options);
  cert.dimension_clause = cmp(cert.d_over_c, cert.d_over_cb, alpha) == Ordering::EQ;
  auto closure = [&](const ElementSet& x) {
    ClosureResult r = icl(m, x, alpha, beta, options);
    if (!r.converged) throw BudgetExceeded("closure did not converge");
    return r.closure;
  };
  const ElementSet meet = set_intersection(closure(set_union(a, c)), closure(set_union(b, c)));
  cert.stray = set_difference(meet, closure(c));
  cert.closure_clause = cert.stray.empty();
  cert.independent = cert.dimension_clause && cert.closure_clause;
  return cert;
}

}  // namespace predim
