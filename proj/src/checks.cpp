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

#include "predim/checks.hpp"

#include <map>
#include <random>

#include "predim/constructions.hpp"
#include "predim/oracle.hpp"

namespace predim {
namespace {

constexpr std::size_t kMaxFailures = 10;

class Tally {
 public:
  Tally(std::string name, std::uint64_t seed) {
    r_.name = std::move(name);
    r_.seed = seed;
  }
  void bump(const std::string& key) { ++counts_[key]; }
  void trial(bool ok, const std::string& what) {
    ++r_.trials;
    if (ok) {
      ++r_.passed;
    } else if (r_.failures.size() < kMaxFailures) {
      r_.failures.push_back("trial " + std::to_string(r_.trials - 1) + ": " + what);
    }
  }
  SuiteReport done() {
    for (auto& [k, v] : counts_) r_.counts.emplace_back(k, v);
    return std::move(r_);
  }

 private:
  SuiteReport r_;
  std::map<std::string, std::size_t> counts_;
};

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + rng() % (hi - lo + 1);
}

Structure random_graph(std::mt19937_64& rng, std::size_t n, std::uint64_t percent) {
  Structure s = Structure::graph(n);
  for (ElementId u = 0; u < n; ++u) {
    for (ElementId v = u + 1; v < n; ++v) {
      if (rng() % 100 < percent) s.add_edge(u, v);
    }
  }
  return s;
}

// Random graph thinned edge by edge until it lies in K.
Structure random_member(std::mt19937_64& rng, std::size_t n, const AlphaSpec& alpha) {
  Structure s = random_graph(rng, n, draw(rng, 10, 60));
  while (!is_in_K(s, alpha).member) {
    const auto& edges = s.instances(0);
    auto it = edges.begin();
    std::advance(it, rng() % edges.size());
    Structure t = Structure::graph(0);
    for (ElementId v : s.elements()) t.add_element(v);
    for (const Instance& e : edges) {
      if (e != *it) t.add_edge(e[0], e[1]);
    }
    s = std::move(t);
  }
  return s;
}

ElementSet random_subset(std::mt19937_64& rng, const ElementSet& from, std::uint64_t percent) {
  ElementSet out;
  for (ElementId v : from) {
    if (rng() % 100 < percent) out.push_back(v);
  }
  return out;
}

std::string show(const ElementSet& x) {
  std::string o = "{";
  for (std::size_t i = 0; i < x.size(); ++i) o += (i ? "," : "") + std::to_string(x[i]);
  return o + "}";
}

}  // namespace

std::size_t SuiteReport::count(const std::string& key) const {
  for (const auto& [k, v] : counts) {
    if (k == key) return v;
  }
  return 0;
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json j;
  j["suite"] = r.name;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["passed"] = r.passed;
  j["ok"] = r.ok();
  j["counts"] = nlohmann::json::object();
  for (const auto& [k, v] : r.counts) j["counts"][k] = v;
  j["failures"] = r.failures;
  return j;
}

AlphaSpec random_alpha(std::uint64_t value, int max_den) {
  std::mt19937_64 rng(value);
  const long long q = static_cast<long long>(draw(rng, 2, max_den));
  const long long p = static_cast<long long>(draw(rng, 1, q - 1));
  return AlphaSpec::exact(Rational(p, q));
}

SuiteReport check_axioms(std::size_t trials, std::uint64_t seed) {
  Tally t("axioms", seed);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const AlphaSpec alpha = random_alpha(rng());
    const Structure m = random_graph(rng, draw(rng, 3, 14), draw(rng, 10, 70));
    const AxiomReport r = verify_axioms(m, 1, alpha, 1, rng());
    t.bump(r.axiom1_ok == 1 ? "axiom1_ok" : "axiom1_failed");
    t.bump(r.axiom2_checked == r.axiom2_ok ? "axiom2_ok" : "axiom2_failed");
    t.bump(r.axiom3_premise == r.axiom3_ok ? "axiom3_ok" : "axiom3_failed");
    if (r.axiom2_checked) t.bump("axiom2_negative");
    if (r.axiom3_premise) t.bump("axiom3_premise");
    if (r.identity_ok != 1) t.bump("identity_failed");
    t.trial(r.ok(), r.ok() ? "" : r.violations.front() + " at alpha " + alpha.describe());
  }
  return t.done();
}

SuiteReport check_closure(std::size_t trials, std::uint64_t seed, const MinimizeOptions& options) {
  Tally t("closure", seed);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const AlphaSpec alpha = random_alpha(rng());
    const Structure m = random_member(rng, draw(rng, 2, 12), alpha);
    const ElementSet a = random_subset(rng, m.elements(), draw(rng, 10, 40));
    const ClosureResult c = icl(m, a, alpha, 1, options);
    const ElementSet again = icl(m, c.closure, alpha, 1, options).closure;
    const ElementSet meet = oracle::icl_intersection(m, a, alpha);
    const ElementSet def = oracle::icl_definitional(m, a, alpha);
    const bool idempotent = again == c.closure;
    const bool intersection = meet == c.closure;
    const bool definitional = def == c.closure;
    const bool strong = is_strong(c.closure, m, alpha, 1, options) &&
                        oracle::is_strong(c.closure, m, alpha);
    if (c.closure != a) t.bump("proper");
    t.trial(c.converged && idempotent && intersection && definitional && strong,
            "A=" + show(a) + " icl=" + show(c.closure) + " meet=" + show(meet) + " at alpha " +
                alpha.describe());
  }
  return t.done();
}

SuiteReport check_amalgamation(std::size_t trials, std::uint64_t seed,
                               const MinimizeOptions& options) {
  Tally t("amalgamation", seed);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const AlphaSpec alpha = random_alpha(rng());
    const Structure c = random_member(rng, draw(rng, 1, 8), alpha);
    const ElementSet a = random_subset(rng, c.elements(), 40);
    const Structure a_part = induced(c, a);

    // B: A plus fresh points, redrawn until A <= B and B in K.
    Structure b;
    for (int attempt = 0;; ++attempt) {
      b = a_part;
      const std::size_t extra = draw(rng, 1, 4);
      ElementSet fresh;
      for (std::size_t k = 0; k < extra; ++k) fresh.push_back(b.add_element());
      const std::uint64_t percent = attempt < 20 ? draw(rng, 10, 60) : 0;
      for (ElementId u : fresh) {
        for (ElementId v : b.elements()) {
          if (v != u && !(contains(fresh, v) && v < u) && rng() % 100 < percent) b.add_edge(u, v);
        }
      }
      if (is_in_K(b, alpha, 1, options).member && is_strong(a, b, alpha, 1, options)) break;
    }
    t.bump(a.empty() ? "empty_base" : "nonempty_base");

    std::map<ElementId, ElementId> identify;
    for (ElementId v : a) identify[v] = v;
    const Gluing g = glue(c, b, identify);
    const Structure& d = g.result;
    ElementSet b_image;
    for (const auto& [from, to] : g.right_map) b_image.push_back(to);
    b_image = make_set(b_image);

    const bool in_k = is_in_K(d, alpha, 1, options).member && oracle::is_in_K(d, alpha);
    const bool c_strong = is_strong(c.elements(), d, alpha, 1, options) &&
                          oracle::is_strong(c.elements(), d, alpha);
    const bool free = e_cross(d, set_difference(b_image, a), set_difference(c.elements(), a)) == 0;
    const bool additive = delta(d) == delta(b) + delta(c) - delta(a_part);
    t.trial(in_k && c_strong && free && additive,
            "|A|=" + std::to_string(a.size()) + " |B|=" + std::to_string(b.size()) +
                " |C|=" + std::to_string(c.size()) + " at alpha " + alpha.describe());
  }
  return t.done();
}

SuiteReport check_identities(std::size_t trials, std::uint64_t seed,
                             const MinimizeOptions& options) {
  Tally t("identities", seed);
  std::mt19937_64 rng(seed);
  const Rational grid[] = {Rational(1, 2), Rational(5, 11), Rational(5, 8), Rational(7, 10),
                           Rational(2, 5), Rational(3, 5)};
  std::map<Rational, CertPtr> seeds;
  auto pick = [&](const AlphaSpec& alpha) -> CertPtr {
    auto it = seeds.find(alpha.value());
    if (it == seeds.end()) it = seeds.emplace(alpha.value(), find_seed(alpha, 1, options)).first;
    switch (rng() % 3) {
      case 0:
        return it->second;
      case 1:
        return make_seed(a_nk_structure(static_cast<int>(draw(rng, 1, 4)),
                                        static_cast<int>(draw(rng, 0, 3))),
                         "A", alpha, 1, options);
      default:
        return make_seed(rng() % 2 ? case1_structure() : case2_structure(), "case", alpha, 1,
                         options);
    }
  };
  // Relative predimension straight from the raw structure.
  auto raw = [](const Structure& s, const ElementSet& base) {
    return delta(s) - delta(induced(s, base));
  };
  for (std::size_t i = 0; i < trials; ++i) {
    const AlphaSpec alpha = AlphaSpec::exact(grid[rng() % std::size(grid)]);
    const CertPtr x1 = pick(alpha);
    const CertPtr x2 = pick(alpha);
    const int k = static_cast<int>(draw(rng, 1, 4));
    const CertPtr cp = amalg_copies(x1, k, alpha, 1, true, options);
    const CertPtr ch = chain(x1, x2, alpha, 1, options);
    const DimValue b1 = raw(x1->p.s, x1->p.base());
    const DimValue b2 = raw(x2->p.s, x2->p.base());
    const bool copies_ok = raw(cp->p.s, cp->p.base()) == b1 * Rational(k) &&
                           cp->size() == 2 + static_cast<std::size_t>(k) * (x1->size() - 2);
    const bool chain_ok = raw(ch->p.s, ch->p.base()) == b1 + b2 + DimValue::constant(1) &&
                          ch->size() == x1->size() + x2->size() - 1;
    bool facts_ok = true;
    const DimValue sum = b1 + b2;
    if (sign(sum + DimValue::constant(1), alpha) >= 0 && sign(sum, alpha) < 0) {
      t.bump("one_point_regime");
      const DimValue one = DimValue::constant(1);
      facts_ok = ch->facts && ch->facts->holds &&
                 le(one, raw(ch->p.s, {ch->p.a}), alpha) && le(one, raw(ch->p.s, {ch->p.b}), alpha);
    }
    t.trial(copies_ok && chain_ok && facts_ok,
            x1->label + " / " + x2->label + " k=" + std::to_string(k) + " at alpha " +
                alpha.describe());
  }
  return t.done();
}

}  // namespace predim
