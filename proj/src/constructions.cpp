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

#include "predim/constructions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>

#include "predim/hypergraph.hpp"
#include "predim/oracle.hpp"

namespace predim {
namespace {

constexpr ElementId kA = 0;
constexpr ElementId kB = 1;
constexpr ElementId kE = 2;

DimValue rel_to(const Structure& s, const ElementSet& base, const Rational& beta) {
  return delta_rel(s, s.elements(), base, beta);
}

// Position of alpha against t: -1 below, 0 equal, +1 above. Throws
// InsufficientPrecision when an interval straddles t.
int side(const AlphaSpec& alpha, const Rational& t) {
  if (alpha.is_exact()) {
    const Rational& v = alpha.value();
    return v < t ? -1 : (v == t ? 0 : 1);
  }
  if (alpha.lo() >= t) return 1;
  if (alpha.hi() <= t) return -1;
  throw InsufficientPrecision("alpha interval straddles " + to_string(t));
}

// Like side(), but an undecided comparison reports `undecided`.
int side_or(const AlphaSpec& alpha, const Rational& t, int undecided) {
  try {
    return side(alpha, t);
  } catch (const InsufficientPrecision&) {
    return undecided;
  }
}

Rational midpoint(const AlphaSpec& alpha) {
  return alpha.is_exact() ? alpha.value() : (alpha.lo() + alpha.hi()) / 2;
}

// One element per orbit of transpositions fixing `fixed`: false twins (equal
// open neighbourhoods) and, for plain graphs, true twins.
ElementSet orbit_representatives(const Structure& s, const ElementSet& fixed) {
  Hypergraph h(s);
  std::map<std::vector<std::vector<int>>, int> open_seen;
  std::map<std::vector<int>, int> closed_seen;
  const bool graph = s.signature().is_graph();
  ElementSet reps;
  for (int v = 0; v < h.size(); ++v) {
    if (contains(fixed, h.id(v))) continue;
    std::vector<std::vector<int>> open;
    std::vector<int> closed{v};
    for (int ei : h.incident(v)) {
      const auto& edge = h.edges()[ei];
      std::vector<int> rest;
      for (int u : edge.members) {
        if (u != v) rest.push_back(u);
      }
      if (graph) closed.push_back(rest.front());
      rest.push_back(-edge.mult);
      open.push_back(std::move(rest));
    }
    std::sort(open.begin(), open.end());
    std::sort(closed.begin(), closed.end());
    bool fresh = open_seen.emplace(std::move(open), v).second;
    if (graph) fresh = closed_seen.emplace(std::move(closed), v).second && fresh;
    if (fresh) reps.push_back(h.id(v));
  }
  return reps;
}

PointedStructure empty_pointed() {
  PointedStructure p;
  p.s = Structure(Signature::graph());
  for (ElementId id : {kA, kB, kE}) p.s.add_element(id);
  return p;
}

void check_alpha_open_unit(const AlphaSpec& alpha) {
  const Rational lo = alpha.is_exact() ? alpha.value() : alpha.lo();
  const Rational hi = alpha.is_exact() ? alpha.value() : alpha.hi();
  if (lo <= 0 || hi >= 1) throw AlphaOutOfRange("alpha must lie in (0, 1)");
}

bool try_target(const XTarget& target, const XCertificate& x) {
  try {
    return target(x);
  } catch (const InsufficientPrecision&) {
    return false;
  }
}

CertPtr member_or_null(PointedStructure p, std::string label, const AlphaSpec& alpha,
                       const Rational& beta, const MinimizeOptions& options) {
  CertPtr c = make_seed(std::move(p), std::move(label), alpha, beta, options);
  return c->member ? c : nullptr;
}

// Small graphs over a, b, e with up to `max_extra` further points, by
// increasing size and edge count.
using RelFilter = std::function<bool(const DimValue&)>;
using Accept = std::function<bool(const PointedStructure&)>;

std::optional<PointedStructure> search_small_graphs(const Rational& beta, int max_extra,
                                                    const RelFilter& rel_ok,
                                                    const Accept& accept) {
  for (int extra = 1; extra <= max_extra; ++extra) {
    std::vector<std::pair<ElementId, ElementId>> pairs;
    for (int i = 0; i < extra; ++i) {
      for (ElementId base : {kA, kB, kE}) pairs.emplace_back(base, 3 + i);
    }
    for (int i = 0; i < extra; ++i) {
      for (int j = i + 1; j < extra; ++j) pairs.emplace_back(3 + i, 3 + j);
    }
    const int bits = static_cast<int>(pairs.size());
    for (int edges = 1; edges <= bits; ++edges) {
      if (!rel_ok(DimValue(beta * (extra + 1), Rational(edges)))) continue;
      // Gosper's hack over masks with `edges` bits.
      std::uint64_t mask = (std::uint64_t{1} << edges) - 1;
      const std::uint64_t end = std::uint64_t{1} << bits;
      for (; mask < end;) {
        // Extra points ordered by their attachment to a, b, e.
        bool ordered = true;
        for (int i = 0; i + 1 < extra && ordered; ++i) {
          ordered = ((mask >> (3 * i)) & 7) <= ((mask >> (3 * i + 3)) & 7);
        }
        if (ordered) {
          PointedStructure p = empty_pointed();
          for (int i = 0; i < extra; ++i) p.s.add_element(3 + i);
          for (int i = 0; i < bits; ++i) {
            if (mask >> i & 1) p.s.add_edge(pairs[i].first, pairs[i].second);
          }
          try {
            if (accept(p)) return p;
          } catch (const InsufficientPrecision&) {
          }
        }
        const std::uint64_t low = mask & -mask;
        const std::uint64_t ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
      }
    }
  }
  return std::nullopt;
}

struct DimLess {
  bool operator()(const DimValue& x, const DimValue& y) const {
    if (x.p != y.p) return x.p < y.p;
    return x.q < y.q;
  }
};

void verify_block(CnResult& r, const AlphaSpec& alpha, int n, const Rational& beta,
                  const MinimizeOptions& options) {
  const ElementSet base = make_set({r.x, r.y});
  r.rel = rel_to(r.c, base, beta);
  r.discrete = e_count(induced(r.c, make_set({r.x, r.y, r.point}))) == 0;
  r.range_ok = cmp(r.rel, DimValue{}, alpha) != Ordering::LT &&
               cmp(r.rel, DimValue::constant(beta / n), alpha) == Ordering::LT;
  try {
    r.primitive = is_primitive(base, r.c, alpha, beta, options);
  } catch (const NotStrong&) {
    r.primitive = false;
  }
  if (r.c.size() <= 22) {
    bool exhaustive = false;
    try {
      exhaustive = oracle::is_primitive(base, r.c, alpha, beta);
    } catch (const NotStrong&) {
    }
    r.primitive_exhaustive = true;
    r.primitive = r.primitive && exhaustive;
  }
  r.rel_x = rel_to(r.c, {r.x}, beta);
  r.rel_y = rel_to(r.c, {r.y}, beta);
  r.d_point_x = d_over(r.c, {r.point}, {r.x}, alpha, beta, options);
  r.d_point_y = d_over(r.c, {r.point}, {r.y}, alpha, beta, options);
}

// C = A1 * A2 with -1 < beta_1 < -1 + 1/n and -(beta_1 + 1)/2 < beta_2 < 0.
// Primitivity of the result is not automatic (a one-sided set over x or y
// can undercut delta(C/B)), so A2 is accepted only when the chained result
// is primitive.
CertPtr chain_block(const AlphaSpec& alpha, int n, const SearchBudget& budget,
                    const Rational& beta, const MinimizeOptions& options) {
  const DimValue zero{};
  const DimValue one = DimValue::constant(beta);
  const DimValue lower = DimValue::constant(-beta / n);
  const DimValue upper1 = DimValue::constant(-beta + beta / n);
  // On a lattice, (-(beta_1 + 1)/2, 0) may hold no value at all.
  const auto room = [&](const DimValue& b1) {
    if (!alpha.is_exact()) return true;
    return lattice_step(alpha, beta) < (b1.at(alpha.value()) + beta) / 2;
  };
  const auto finish = [&](const CertPtr& a1, const SearchBudget& b) -> CertPtr {
    const DimValue floor2 = -(a1->beta + one) * Rational(1, 2);
    CertPtr found;
    search_X(
        alpha,
        [&](const XCertificate& x) {
          if (cmp(x.beta, floor2, alpha) != Ordering::GT ||
              cmp(x.beta, zero, alpha) != Ordering::LT) {
            return false;
          }
          CertPtr c = chain(a1, std::make_shared<XCertificate>(x), alpha, beta, options);
          try {
            if (!is_primitive(c->p.base(), c->p.s, alpha, beta, options)) return false;
          } catch (const NotStrong&) {
            return false;
          }
          found = c;
          return true;
        },
        b, beta, options);
    return found;
  };

  CertPtr d = search_X(
      alpha,
      [&](const XCertificate& x) {
        return cmp(x.beta, lower, alpha) == Ordering::GT &&
               cmp(x.beta, zero, alpha) == Ordering::LT;
      },
      budget, beta, options);
  int k = 1;
  while (cmp(d->beta * Rational(k + 1), -one, alpha) == Ordering::GT) ++k;
  CertPtr a1 = amalg_copies(d, k, alpha, beta, false, options);
  if (room(a1->beta)) {
    try {
      return finish(a1, budget);
    } catch (const BudgetExceeded&) {
    }
  }
  // Otherwise let the search pick beta_1 as well.
  CertPtr result;
  SearchBudget inner = budget;
  inner.max_nodes = std::max<std::size_t>(1, budget.max_nodes / 8);
  search_X(
      alpha,
      [&](const XCertificate& x) {
        if (cmp(x.beta, -one, alpha) != Ordering::GT ||
            cmp(x.beta, upper1, alpha) != Ordering::LT || !room(x.beta)) {
          return false;
        }
        try {
          result = finish(std::make_shared<XCertificate>(x), inner);
        } catch (const BudgetExceeded&) {
          return false;
        }
        return true;
      },
      budget, beta, options);
  return result;
}

}  // namespace

ClassReport is_in_A_class(const PointedStructure& p, const AlphaSpec& alpha,
                          const Rational& beta, const MinimizeOptions& options) {
  const ElementSet triple = make_set({p.a, p.b, p.e});
  if (triple.size() != 3) throw InvalidArgument("a, b, e must be distinct");
  require_elements(p.s, triple);
  const ElementSet base = p.base();
  const Structure& s = p.s;
  ClassReport r;
  r.rel = rel_to(s, base, beta);

  r.discrete = e_count(induced(s, triple)) == 0;
  r.in_range = cmp(r.rel, DimValue::constant(-1), alpha) == Ordering::GT &&
               cmp(r.rel, DimValue{}, alpha) != Ordering::GT;

  const KResult k = is_in_K(s, alpha, beta, options);
  r.in_k = k.member;
  if (!k.member) r.witness = k.violating;

  r.minimal = true;
  if (options.oracle) {
    r.minimal = oracle::pointed_minimal(s, base, alpha, beta);
  } else {
    // A' fails iff the least minimizer over some B + x stops short of S.
    for (ElementId x : orbit_representatives(s, base)) {
      ElementSet hull = strong_hull(s, set_union(base, {x}), alpha, beta, options);
      if (hull != s.elements()) {
        r.minimal = false;
        if (k.member) r.witness = std::move(hull);
        break;
      }
    }
  }

  const bool flags[] = {r.in_k, r.discrete, r.minimal, r.in_range};
  for (int i = 0; i < 4; ++i) {
    if (!flags[i]) {
      r.failed_clause = i + 1;
      break;
    }
  }
  static const char* const kReasons[] = {
      "", "a subset has negative predimension", "an instance lies inside {a, b, e}",
      "an intermediate set does not exceed the whole", "relative predimension outside (-1, 0]"};
  r.detail = kReasons[r.failed_clause];
  r.member = r.failed_clause == 0;
  r.observation_holds = r.in_k || !(r.discrete && r.minimal && r.in_range);
  return r;
}

AcceptabilityInterval acceptability(int n, int k) {
  if (n < 1 || k < 1) throw InvalidArgument("acceptability needs n, k >= 1");
  AcceptabilityInterval iv;
  iv.n = n;
  iv.k = k;
  const Rational den(n * k + 3 * n);
  iv.lower = Rational(n + k + 1) / den;
  iv.upper = Rational(n + k + 2) / den;
  return iv;
}

PointedStructure case1_structure() {
  PointedStructure p = empty_pointed();
  const ElementId b1 = p.s.add_element();
  const ElementId b2 = p.s.add_element();
  p.s.add_edge(b1, kA);
  p.s.add_edge(b1, kE);
  p.s.add_edge(b2, kB);
  p.s.add_edge(b2, kE);
  return p;
}

PointedStructure case2_structure() {
  PointedStructure p = empty_pointed();
  const ElementId b1 = p.s.add_element();
  const ElementId b2 = p.s.add_element();
  for (ElementId v : {kA, kB, kE}) p.s.add_edge(b1, v);
  p.s.add_edge(b2, kB);
  p.s.add_edge(b2, kE);
  return p;
}

PointedStructure a_nk_structure(int n, int k) {
  if (n < 1 || k < 0) throw InvalidArgument("A(n,k) needs n >= 1 and k >= 0");
  PointedStructure p = empty_pointed();
  std::vector<ElementId> tops;
  for (int i = 0; i < n; ++i) {
    const ElementId v = p.s.add_element();
    for (ElementId u : {kA, kB, kE}) p.s.add_edge(v, u);
    tops.push_back(v);
  }
  for (int j = 0; j < k; ++j) {
    const ElementId w = p.s.add_element();
    for (ElementId v : tops) p.s.add_edge(w, v);
  }
  return p;
}

const char* to_string(XCertificate::Kind kind) {
  switch (kind) {
    case XCertificate::Kind::seed: return "seed";
    case XCertificate::Kind::copies: return "copies";
    case XCertificate::Kind::chain: return "chain";
  }
  return "?";
}

bool revalidate(const XCertificate& x, const Rational& beta) {
  if (!(rel_to(x.p.s, x.p.base(), beta) == x.beta)) return false;
  if (x.left && !revalidate(*x.left, beta)) return false;
  if (x.right && !revalidate(*x.right, beta)) return false;
  return true;
}

nlohmann::json trace_json(const XCertificate& x) {
  nlohmann::json j;
  j["kind"] = to_string(x.kind);
  j["beta"] = {{"p", to_string(x.beta.p)}, {"q", to_string(x.beta.q)}};
  j["size"] = x.size();
  j["member"] = x.member;
  j["checked"] = x.checked;
  if (x.kind == XCertificate::Kind::seed) j["label"] = x.label;
  if (x.kind == XCertificate::Kind::copies) j["k"] = x.k;
  if (x.facts) {
    j["one_point"] = {{"rel_a", x.facts->rel_a.describe()},
                      {"rel_b", x.facts->rel_b.describe()},
                      {"holds", x.facts->holds}};
  }
  nlohmann::json children = nlohmann::json::array();
  if (x.left) children.push_back(trace_json(*x.left));
  if (x.right) children.push_back(trace_json(*x.right));
  if (!children.empty()) j["children"] = std::move(children);
  return j;
}

CertPtr make_seed(PointedStructure p, std::string label, const AlphaSpec& alpha,
                  const Rational& beta, const MinimizeOptions& options) {
  auto c = std::make_shared<XCertificate>();
  c->beta = rel_to(p.s, p.base(), beta);
  c->p = std::move(p);
  c->label = std::move(label);
  c->checked = true;
  c->member = is_in_A_class(c->p, alpha, beta, options).member;
  return c;
}

CertPtr find_seed(const AlphaSpec& alpha, const Rational& beta,
                  const MinimizeOptions& options) {
  check_alpha_open_unit(alpha);
  if (side(alpha, Rational(3, 4)) > 0) {
    if (CertPtr c = member_or_null(case1_structure(), "case1", alpha, beta, options)) return c;
  }
  if (side_or(alpha, Rational(2, 3), -1) >= 0 && side_or(alpha, Rational(4, 5), 1) < 0) {
    if (CertPtr c = member_or_null(case2_structure(), "case2", alpha, beta, options)) return c;
  }

  // Least (n + k, then n) with l(n,k) < alpha < u(n,k). l(n,k) > 1/(k+3),
  // so n + k beyond a few multiples of 1/alpha cannot qualify first.
  const Rational lo = alpha.is_exact() ? alpha.value() : alpha.lo();
  const Rational hi = alpha.is_exact() ? alpha.value() : alpha.hi();
  const int max_sum = std::min<int>(
      4000, static_cast<int>(boost::multiprecision::numerator(Rational(8) / lo) /
                             boost::multiprecision::denominator(Rational(8) / lo)) + 8);
  const BigInt lo_num = boost::multiprecision::numerator(lo);
  const BigInt lo_den = boost::multiprecision::denominator(lo);
  const BigInt hi_num = boost::multiprecision::numerator(hi);
  const BigInt hi_den = boost::multiprecision::denominator(hi);
  const bool exact = alpha.is_exact();
  for (int sum = 2; sum <= max_sum; ++sum) {
    for (int n = 1; n < sum; ++n) {
      const int k = sum - n;
      const BigInt den = BigInt(n) * (k + 3);
      // Certified l < alpha: lo >= l (interval) or value > l (exact).
      const BigInt l_num(n + k + 1), u_num(n + k + 2);
      const bool above_l = exact ? lo_num * den > l_num * lo_den : lo_num * den >= l_num * lo_den;
      if (!above_l) continue;
      const bool below_u = exact ? hi_num * den < u_num * hi_den : hi_num * den <= u_num * hi_den;
      if (!below_u) continue;
      const std::string label = "A(" + std::to_string(n) + "," + std::to_string(k) + ")";
      if (CertPtr c = member_or_null(a_nk_structure(n, k), label, alpha, beta, options)) {
        return c;
      }
    }
  }

  for (int n = 1; n <= 64; ++n) {
    const Rational l(n + 1, 3 * n), u(n + 2, 3 * n);
    if (side_or(alpha, l, -1) < 0 || side_or(alpha, u, 1) >= 0) continue;
    const std::string label = "A(" + std::to_string(n) + ",0)";
    if (CertPtr c = member_or_null(a_nk_structure(n, 0), label, alpha, beta, options)) return c;
  }

  const auto rel_ok = [&](const DimValue& rel) {
    try {
      return cmp(rel, DimValue::constant(-beta), alpha) == Ordering::GT &&
             cmp(rel, DimValue{}, alpha) != Ordering::GT;
    } catch (const InsufficientPrecision&) {
      return false;
    }
  };
  const auto accept = [&](const PointedStructure& p) {
    return is_in_A_class(p, alpha, beta, options).member;
  };
  if (auto p = search_small_graphs(beta, 5, rel_ok, accept)) {
    return make_seed(std::move(*p), "search", alpha, beta, options);
  }
  if (!alpha.is_exact()) {
    throw InsufficientPrecision("no seed certified on " + alpha.describe());
  }
  throw Unachievable("no seed found for alpha = " + alpha.describe());
}

CertPtr amalg_copies(const CertPtr& x, int k, const AlphaSpec& alpha, const Rational& beta,
                     bool allow_out_of_range, const MinimizeOptions& options) {
  if (k < 1) throw InvalidArgument("copies needs k >= 1");
  if (k == 1) return x;
  const DimValue target = x->beta * Rational(k);
  const bool in_range = cmp(target, DimValue::constant(-1), alpha) == Ordering::GT;
  if (!in_range && !allow_out_of_range) {
    throw XRangeViolation(std::to_string(k) + " * beta = " + target.describe() + " <= -1");
  }
  PointedStructure p = x->p;
  const std::map<ElementId, ElementId> identify{{x->p.a, p.a}, {x->p.b, p.b}};
  for (int i = 1; i < k; ++i) p.s = glue(p.s, x->p.s, identify).result;

  auto c = std::make_shared<XCertificate>();
  c->beta = rel_to(p.s, p.base(), beta);
  if (!(c->beta == target)) throw std::logic_error("copies identity failed");
  c->p = std::move(p);
  c->kind = XCertificate::Kind::copies;
  c->k = k;
  c->left = x;
  if (in_range) {
    c->checked = true;
    c->member = is_in_A_class(c->p, alpha, beta, options).member;
  }
  return c;
}

CertPtr chain(const CertPtr& x1, const CertPtr& x2, const AlphaSpec& alpha,
              const Rational& beta, const MinimizeOptions& options) {
  Gluing g = glue(x1->p.s, x2->p.s, {{x2->p.a, x1->p.b}});
  PointedStructure p;
  p.s = std::move(g.result);
  p.a = x1->p.a;
  p.b = g.right_map.at(x2->p.b);
  p.e = x1->p.e;

  auto c = std::make_shared<XCertificate>();
  const DimValue sum = x1->beta + x2->beta;
  const DimValue target = sum + DimValue::constant(beta);
  c->beta = rel_to(p.s, p.base(), beta);
  if (!(c->beta == target)) throw std::logic_error("chain identity failed");
  c->kind = XCertificate::Kind::chain;
  c->left = x1;
  c->right = x2;

  const DimValue one = DimValue::constant(beta);
  if (cmp(sum, -one, alpha) != Ordering::LT && cmp(sum, DimValue{}, alpha) == Ordering::LT) {
    OnePointBounds f;
    f.rel_a = rel_to(p.s, {p.a}, beta);
    f.rel_b = rel_to(p.s, {p.b}, beta);
    f.holds = cmp(f.rel_a, one, alpha) != Ordering::LT &&
              cmp(f.rel_b, one, alpha) != Ordering::LT;
    c->facts = f;
  }
  c->p = std::move(p);
  c->checked = true;
  c->member = is_in_A_class(c->p, alpha, beta, options).member;
  return c;
}

CertPtr search_X(const AlphaSpec& alpha, const XTarget& target, const SearchBudget& budget,
                 const Rational& beta, const MinimizeOptions& options) {
  struct Candidate {
    std::size_t size = 0;
    Rational mid;  // beta at the midpoint of alpha; larger first
    std::size_t seq = 0;
    DimValue value;
    CertPtr ready;
    XCertificate::Kind kind = XCertificate::Kind::seed;
    std::size_t i = 0, j = 0;
    int k = 1;
  };
  const auto worse = [](const Candidate& x, const Candidate& y) {
    if (x.size != y.size) return x.size > y.size;
    if (x.mid != y.mid) return x.mid < y.mid;
    return x.seq > y.seq;
  };
  std::priority_queue<Candidate, std::vector<Candidate>, decltype(worse)> queue(worse);
  const Rational mid = midpoint(alpha);
  std::size_t seq = 0;
  std::map<DimValue, std::size_t, DimLess> pending;
  std::map<DimValue, std::size_t, DimLess> done;
  std::vector<CertPtr> pool;

  const auto push = [&](Candidate c) {
    if (c.size > budget.max_elements || done.count(c.value)) return;
    auto it = pending.find(c.value);
    if (it != pending.end() && it->second <= c.size) return;
    pending[c.value] = c.size;
    c.mid = c.value.at(mid);
    c.seq = seq++;
    queue.push(std::move(c));
  };
  const auto push_ready = [&](const CertPtr& cert) {
    if (!cert || !cert->member) return;
    Candidate c;
    c.size = cert->size();
    c.value = cert->beta;
    c.ready = cert;
    push(std::move(c));
  };

  push_ready(find_seed(alpha, beta, options));
  const auto family = [&](PointedStructure p, std::string label) {
    if (p.s.size() > static_cast<std::size_t>(budget.seed_size)) return;
    try {
      push_ready(make_seed(std::move(p), std::move(label), alpha, beta, options));
    } catch (const InsufficientPrecision&) {
    }
  };
  family(case1_structure(), "case1");
  family(case2_structure(), "case2");
  for (int n = 1; n + 3 <= budget.seed_size; ++n) {
    for (int k = 0; n + k + 3 <= budget.seed_size; ++k) {
      family(a_nk_structure(n, k), "A(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
  }

  const DimValue minus_one = DimValue::constant(-beta);
  const DimValue minus_two = DimValue::constant(-2 * beta);
  std::size_t nodes = 0;
  while (!queue.empty()) {
    Candidate c = queue.top();
    queue.pop();
    if (done.count(c.value)) continue;
    if (++nodes > budget.max_nodes) throw BudgetExceeded("search node budget exhausted");
    if (options.budget) options.budget->charge();
    CertPtr cert = c.ready;
    if (!cert) {
      cert = c.kind == XCertificate::Kind::copies
                 ? amalg_copies(pool[c.i], c.k, alpha, beta, false, options)
                 : chain(pool[c.i], pool[c.j], alpha, beta, options);
    }
    if (!cert->member) continue;
    done[c.value] = pool.size();
    pool.push_back(cert);
    if (try_target(target, *cert)) return cert;

    const std::size_t xi = pool.size() - 1;
    Ordering neg;
    try {
      neg = cmp(cert->beta, DimValue{}, alpha);
    } catch (const InsufficientPrecision&) {
      continue;
    }
    if (neg != Ordering::LT) continue;
    const std::size_t xs = cert->size();
    for (int k = 2;; ++k) {
      const DimValue v = cert->beta * Rational(k);
      const std::size_t size = 2 + k * (xs - 2);
      if (size > budget.max_elements) break;
      Ordering o;
      try {
        o = cmp(v, minus_one, alpha);
      } catch (const InsufficientPrecision&) {
        break;
      }
      if (o != Ordering::GT) break;
      Candidate n;
      n.size = size;
      n.value = v;
      n.kind = XCertificate::Kind::copies;
      n.i = xi;
      n.k = k;
      push(std::move(n));
    }
    for (std::size_t yi = 0; yi <= xi; ++yi) {
      const DimValue sum = cert->beta + pool[yi]->beta;
      try {
        if (cmp(sum, minus_two, alpha) != Ordering::GT) continue;
        if (cmp(sum, minus_one, alpha) == Ordering::GT) continue;
      } catch (const InsufficientPrecision&) {
        continue;
      }
      Candidate n;
      n.size = xs + pool[yi]->size() - 1;
      n.value = sum + DimValue::constant(beta);
      n.kind = XCertificate::Kind::chain;
      n.i = yi;
      n.j = xi;
      push(std::move(n));
    }
  }
  throw BudgetExceeded("no reachable value within " + std::to_string(budget.max_elements) +
                       " elements");
}

CertPtr approach_zero(const AlphaSpec& alpha, int m, const SearchBudget& budget,
                      const Rational& beta, const MinimizeOptions& options) {
  if (m < 1) throw InvalidArgument("approach_zero needs m >= 1");
  const DimValue lower = DimValue::constant(-beta / m);
  return search_X(
      alpha,
      [&](const XCertificate& x) {
        return cmp(x.beta, lower, alpha) == Ordering::GT &&
               cmp(x.beta, DimValue{}, alpha) != Ordering::GT;
      },
      budget, beta, options);
}

CertPtr dense_find(const AlphaSpec& alpha, const Rational& gamma, const Rational& upper,
                   const SearchBudget& budget, const Rational& beta,
                   const MinimizeOptions& options) {
  if (!(gamma >= -1 && gamma < upper && upper <= 0)) {
    throw InvalidArgument("dense_find needs -1 <= gamma < upper <= 0");
  }
  if (alpha.is_exact()) {
    const Rational step = lattice_step(alpha, beta);
    const Rational q = gamma / step;
    BigInt j = boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
    if (Rational(j) > q) --j;  // floor
    if (!(Rational(j + 1) * step < upper)) {
      throw Unachievable("no multiple of " + to_string(step) + " lies in (" + to_string(gamma) +
                         ", " + to_string(upper) + ")");
    }
  }
  const DimValue lo = DimValue::constant(gamma), hi = DimValue::constant(upper);
  return search_X(
      alpha,
      [&](const XCertificate& x) {
        return cmp(x.beta, lo, alpha) == Ordering::GT && cmp(x.beta, hi, alpha) == Ordering::LT;
      },
      budget, beta, options);
}

DimValue d_over(const Structure& s, const ElementSet& x, const ElementSet& y,
                const AlphaSpec& alpha, const Rational& beta, const MinimizeOptions& options) {
  return d_in(s, set_union(x, y), alpha, beta, options).value -
         d_in(s, y, alpha, beta, options).value;
}

CnResult build_Cn(const AlphaSpec& alpha, int n, const SearchBudget& budget,
                  const Rational& beta, const MinimizeOptions& options, CnRoute route) {
  if (n < 1) throw InvalidArgument("build_Cn needs n >= 1");
  CnResult r;
  CertPtr cert;
  if (alpha.is_exact() && route == CnRoute::automatic) {
    try {
      cert = search_X(
          alpha,
          [&](const XCertificate& x) { return cmp(x.beta, DimValue{}, alpha) == Ordering::EQ; },
          budget, beta, options);
      r.route = "zero";
    } catch (const BudgetExceeded&) {
    }
  }
  if (!cert) {
    cert = chain_block(alpha, n, budget, beta, options);
    r.route = "chain";
  }

  r.cert = cert;
  r.c = cert->p.s;
  r.x = cert->p.a;
  r.y = cert->p.b;
  r.point = cert->p.e;
  verify_block(r, alpha, n, beta, options);
  return r;
}

std::optional<CnResult> search_block(const AlphaSpec& alpha, int n, int max_extra,
                                     const Rational& beta, const MinimizeOptions& options) {
  if (n < 1) throw InvalidArgument("search_block needs n >= 1");
  const DimValue cap = DimValue::constant(beta / n);
  const DimValue two = DimValue::constant(2 * beta);
  const auto rel_ok = [&](const DimValue& rel) {
    try {
      return cmp(rel, DimValue{}, alpha) != Ordering::LT && cmp(rel, cap, alpha) == Ordering::LT;
    } catch (const InsufficientPrecision&) {
      return false;
    }
  };
  const auto accept = [&](const PointedStructure& p) {
    if (!is_in_K(p.s, alpha, beta, options).member) return false;
    const ElementSet base = p.base();
    if (strong_hull(p.s, base, alpha, beta, options) != base) return false;
    for (ElementId v : {p.a, p.b}) {
      if (cmp(d_in(p.s, make_set({v, p.e}), alpha, beta, options).value, two, alpha) ==
          Ordering::LT) {
        return false;
      }
    }
    return is_primitive(base, p.s, alpha, beta, options);
  };
  std::optional<PointedStructure> p = search_small_graphs(beta, max_extra, rel_ok, accept);
  if (!p) return std::nullopt;
  CnResult r;
  r.route = "search";
  r.c = p->s;
  r.x = p->a;
  r.y = p->b;
  r.point = p->e;
  r.cert = make_seed(std::move(*p), "search", alpha, beta, options);
  verify_block(r, alpha, n, beta, options);
  return r;
}

WitnessReport rank0_witness(const AlphaSpec& alpha, int blocks, const SearchBudget& budget,
                            const Rational& beta, const MinimizeOptions& options) {
  if (blocks < 1) throw InvalidArgument("rank0_witness needs at least one block");
  WitnessReport r;
  for (int n = 1; n <= blocks; ++n) {
    std::optional<CnResult> found = search_block(alpha, n, 4, beta, options);
    CnResult c = found ? std::move(*found) : build_Cn(alpha, n, budget, beta, options);
    r.block_rel.push_back(c.rel);
    r.block_size.push_back(c.c.size());
    r.block_route.push_back(c.route);
    r.blocks.push_back(c);
    if (n == 1) {
      r.w = c.c;
      r.x = c.x;
      r.y = c.y;
      r.c = c.point;
      continue;
    }
    Gluing g = glue(r.w, c.c, {{c.x, r.x}, {c.y, r.y}});
    r.w = std::move(g.result);
    r.c = g.right_map.at(c.point);
  }
  r.nonnegative = std::all_of(r.block_rel.begin(), r.block_rel.end(), [&](const DimValue& v) {
    return cmp(v, DimValue{}, alpha) != Ordering::LT;
  });
  r.d_c_over_b = d_over(r.w, {r.c}, make_set({r.x, r.y}), alpha, beta, options);
  r.d_c_over_x = d_over(r.w, {r.c}, {r.x}, alpha, beta, options);
  r.d_c_over_y = d_over(r.w, {r.c}, {r.y}, alpha, beta, options);
  return r;
}

Structure glue_over_point(const std::vector<CnResult>& blocks) {
  if (blocks.empty()) throw InvalidArgument("need at least one block");
  Structure w = blocks.front().c;
  const CnResult& first = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    const CnResult& b = blocks[i];
    w = glue(w, b.c, {{b.x, first.x}, {b.y, first.y}, {b.point, first.point}}).result;
  }
  return w;
}

DidipReport didip_witness(const AlphaSpec& alpha, int blocks, const SearchBudget& budget,
                          const Rational& beta, const MinimizeOptions& options) {
  if (blocks < 2) throw InvalidArgument("didip_witness needs at least two blocks");
  DidipReport r;
  for (int n = 1; n <= blocks; ++n) {
    CnResult c;
    try {
      c = build_Cn(alpha, n, budget, beta, options, CnRoute::chain);
    } catch (const BudgetExceeded&) {
      c = build_Cn(alpha, n, budget, beta, options);
    }
    r.block_rel.push_back(c.rel);
    if (n == 1) {
      r.w = c.c;
      r.c = c.point;
      r.bases.push_back(make_set({c.x, c.y}));
      continue;
    }
    Gluing g = glue(r.w, c.c, {{c.point, r.c}});
    r.w = std::move(g.result);
    r.bases.push_back(make_set({g.right_map.at(c.x), g.right_map.at(c.y)}));
  }
  ElementSet prefix;
  for (const ElementSet& b : r.bases) {
    prefix = set_union(prefix, b);
    r.d_c_prefix.push_back(d_over(r.w, {r.c}, prefix, alpha, beta, options));
  }
  r.d_c_over_all = r.d_c_prefix.back();
  return r;
}

}  // namespace predim
