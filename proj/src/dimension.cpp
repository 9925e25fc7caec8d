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

#include "predim/dimension.hpp"

#include <bit>
#include <optional>
#include <random>

#include "predim/hypergraph.hpp"
#include "predim/oracle.hpp"

namespace predim {
namespace {

void require_disjoint(const ElementSet& a, const ElementSet& b) {
  if (!set_intersection(a, b).empty()) throw SetsNotDisjoint("sets must be disjoint");
}

bool meets(const Instance& inst, const ElementSet& s) {
  for (ElementId id : inst) {
    if (contains(s, id)) return true;
  }
  return false;
}

}  // namespace

std::size_t e_count(const Structure& s) { return s.instance_count(); }

std::size_t e_cross(const Structure& s, const ElementSet& a, const ElementSet& b) {
  require_elements(s, a);
  require_elements(s, b);
  require_disjoint(a, b);
  const ElementSet ab = set_union(a, b);
  std::size_t count = 0;
  for (std::size_t r = 0; r < s.signature().size(); ++r) {
    for (const Instance& inst : s.instances(r)) {
      if (is_subset(inst, ab) && meets(inst, a) && meets(inst, b)) ++count;
    }
  }
  return count;
}

std::size_t e_cross3(const Structure& s, const ElementSet& a, const ElementSet& b,
                     const ElementSet& c) {
  require_elements(s, a);
  require_elements(s, b);
  require_elements(s, c);
  require_disjoint(a, b);
  require_disjoint(a, c);
  require_disjoint(b, c);
  const ElementSet abc = set_union(set_union(a, b), c);
  std::size_t count = 0;
  for (std::size_t r = 0; r < s.signature().size(); ++r) {
    for (const Instance& inst : s.instances(r)) {
      if (is_subset(inst, abc) && meets(inst, a) && meets(inst, c)) ++count;
    }
  }
  return count;
}

DimValue delta(const Structure& s, const Rational& beta) {
  return {beta * static_cast<long long>(s.size()), Rational(static_cast<long long>(e_count(s)))};
}

DimValue delta_rel(const Structure& s, const ElementSet& a, const ElementSet& b,
                   const Rational& beta) {
  return delta(induced(s, set_union(a, b)), beta) - delta(induced(s, b), beta);
}

DInResult d_in(const Structure& n, const ElementSet& a, const AlphaSpec& alpha,
               const Rational& beta, const MinimizeOptions& options) {
  require_elements(n, a);
  if (options.oracle) return oracle::d_in(n, a, alpha, beta);
  const Hypergraph h(n);
  const Weights w(alpha, beta);
  const std::vector<char> base = h.mask(a);
  const std::vector<char> all(h.size(), 1);
  Minimum m = minimize(h, w, base, all, options);
  return {delta(induced(n, a), beta) + w.to_dim(m.value), h.ids(m.mask)};
}

DimValue d_rel(const Structure& n, const ElementSet& a, const ElementSet& b,
               const AlphaSpec& alpha, const Rational& beta, const MinimizeOptions& options) {
  return d_in(n, set_union(a, b), alpha, beta, options).value -
         d_in(n, b, alpha, beta, options).value;
}

ElementSet strong_hull(const Structure& n, const ElementSet& a, const AlphaSpec& alpha,
                       const Rational& beta, const MinimizeOptions& options) {
  return d_in(n, a, alpha, beta, options).minimizer;
}

bool is_strong(const ElementSet& a, const Structure& n, const AlphaSpec& alpha,
               const Rational& beta, const MinimizeOptions& options) {
  if (options.oracle) return oracle::is_strong(a, n, alpha, beta);
  return strong_hull(n, a, alpha, beta, options) == a;
}

KResult is_in_K(const Structure& s, const AlphaSpec& alpha, const Rational& beta,
                const MinimizeOptions& options) {
  if (options.oracle) {
    if (oracle::is_in_K(s, alpha, beta)) return {};
    // Smallest violating subset by enumeration.
    ElementSet best;
    const ElementSet ids = s.elements();
    std::optional<std::uint32_t> pick;
    for (std::uint32_t m = 1; m < (1u << ids.size()); ++m) {
      if (pick && std::popcount(m) >= std::popcount(*pick)) continue;
      ElementSet sub;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (m >> i & 1) sub.push_back(ids[i]);
      }
      if (sign(delta(induced(s, sub), beta), alpha) < 0) {
        pick = m;
        best = sub;
      }
    }
    return {false, best};
  }
  const Hypergraph h(s);
  const Weights w(alpha, beta);
  const std::vector<char> none(h.size(), 0);
  std::vector<char> allowed(h.size(), 1);
  Minimum m = minimize(h, w, none, allowed, options);
  if (w.sign(m.value) >= 0) return {};
  // Shrink to a minimal violating subset: while some element can be dropped
  // and a negative subset still found, move into that subset.
  std::vector<char> cur = m.mask;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int v = 0; v < h.size() && !shrunk; ++v) {
      if (!cur[v]) continue;
      std::vector<char> sub = cur;
      sub[v] = 0;
      Minimum inner = minimize(h, w, none, sub, options);
      if (w.sign(inner.value) < 0) {
        cur = inner.mask;
        shrunk = true;
      }
    }
  }
  return {false, h.ids(cur)};
}

Rational lattice_step(const AlphaSpec& alpha, const Rational& beta) {
  return Rational(1, common_denominator({alpha.value(), beta}));
}

AxiomReport verify_axioms(const Structure& s, std::size_t trials, const AlphaSpec& alpha,
                          const Rational& beta, std::uint64_t seed) {
  AxiomReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> part(0, 3);
  const DimValue alpha_value{0, -1};
  std::optional<DimValue> eps2;
  if (alpha.is_exact()) eps2 = DimValue::constant(lattice_step(alpha, beta));

  auto fail = [&](const std::string& what, const ElementSet& a, const ElementSet& b,
                  const ElementSet& c) {
    auto str = [](const ElementSet& x) {
      std::string o = "{";
      for (std::size_t i = 0; i < x.size(); ++i) o += (i ? "," : "") + std::to_string(x[i]);
      return o + "}";
    };
    report.violations.push_back(what + " A=" + str(a) + " B=" + str(b) + " C=" + str(c));
  };

  for (std::size_t t = 0; t < trials; ++t) {
    ElementSet a, b, c;
    for (ElementId id : s.elements()) {
      switch (part(rng)) {
        case 0: a.push_back(id); break;
        case 1: b.push_back(id); break;
        case 2: c.push_back(id); break;
        default: break;
      }
    }
    ++report.trials;
    const ElementSet ab = set_union(a, b), bc = set_union(b, c);

    // Axiom 1: delta(C/A) >= delta(C/AB), gap = alpha * e(C, A, B).
    DimValue gap1 = delta_rel(s, c, a, beta) - delta_rel(s, c, ab, beta);
    bool id1 = gap1 == alpha_value * Rational(static_cast<long long>(e_cross3(s, c, a, b)));
    if (sign(gap1, alpha) >= 0) {
      ++report.axiom1_ok;
    } else {
      fail("axiom 1", a, b, c);
    }

    // Axiom 2: a negative delta(A/B) is at most -epsilon.
    DimValue rel = delta_rel(s, a, b, beta);
    if (sign(rel, alpha) < 0) {
      ++report.axiom2_checked;
      if (!eps2 || le(rel, -*eps2, alpha)) {
        ++report.axiom2_ok;
      } else {
        fail("axiom 2", a, b, c);
      }
    }

    // Axiom 3 with epsilon = alpha: a gap below alpha means no A-C instance
    // and no gap at all.
    DimValue gap3 = rel - delta_rel(s, a, bc, beta);
    std::size_t cross = e_cross3(s, a, b, c);
    bool id3 = gap3 == alpha_value * Rational(static_cast<long long>(cross));
    if (lt(gap3, alpha_value, alpha)) {
      ++report.axiom3_premise;
      if (cross == 0 && sign(gap3, alpha) == 0) {
        ++report.axiom3_ok;
      } else {
        fail("axiom 3", a, b, c);
      }
    }
    if (id1 && id3) {
      ++report.identity_ok;
    } else {
      fail("gap identity", a, b, c);
    }
  }
  return report;
}

}  // namespace predim
