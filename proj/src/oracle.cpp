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

#include "predim/oracle.hpp"

#include <bit>
#include <map>

namespace predim::oracle {
namespace {

using Mask = std::uint32_t;

// Subset table of a structure for one exact alpha: e(S) for every subset S
// of the (at most kMaxElements) elements.
class Table {
 public:
  Table(const Structure& s, const Rational& alpha, const Rational& beta)
      : ids_(s.elements()), alpha_(alpha), beta_(beta) {
    if (ids_.size() > static_cast<std::size_t>(kMaxElements)) {
      throw BudgetExceeded("oracle limited to " + std::to_string(kMaxElements) + " elements");
    }
    n_ = static_cast<int>(ids_.size());
    e_.assign(std::size_t{1} << n_, 0);
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
      for (const Instance& inst : s.instances(r)) e_[mask_of(inst)] += 1;
    }
    for (int i = 0; i < n_; ++i) {
      for (Mask m = 0; m < (Mask{1} << n_); ++m) {
        if (m >> i & 1) e_[m] += e_[m ^ (Mask{1} << i)];
      }
    }
  }

  int size() const { return n_; }
  std::int32_t e(Mask m) const { return e_[m]; }
  Mask full() const { return (Mask{1} << n_) - 1; }

  Mask mask_of(const ElementSet& set) const {
    Mask m = 0;
    for (ElementId id : set) {
      auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
      if (it == ids_.end() || *it != id) throw UnknownElement("unknown element " + std::to_string(id));
      m |= Mask{1} << (it - ids_.begin());
    }
    return m;
  }
  ElementSet set_of(Mask m) const {
    ElementSet out;
    for (int i = 0; i < n_; ++i) {
      if (m >> i & 1) out.push_back(ids_[i]);
    }
    return out;
  }

  // Sign of delta(s) - delta(t).
  int compare(Mask s, Mask t) {
    long long dn = std::popcount(s) - std::popcount(t);
    long long de = static_cast<long long>(e_[s]) - e_[t];
    auto key = std::make_pair(dn, de);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Rational v = beta_ * dn - alpha_ * de;
    int sg = v < 0 ? -1 : (v > 0 ? 1 : 0);
    cache_.emplace(key, sg);
    return sg;
  }

  // strong[S] for every S with base ⊆ S ⊆ top: delta(S) <= delta(T) for all
  // S ⊆ T ⊆ top. Entries outside the interval are left 0.
  std::vector<char> strong_in(Mask base, Mask top) {
    std::vector<Mask> best(std::size_t{1} << n_, 0);
    std::vector<char> strong(std::size_t{1} << n_, 0);
    const Mask free = top & ~base;
    // Enumerate submasks of free in decreasing order so supersets come first.
    for (Mask sub = free;; sub = (sub - 1) & free) {
      Mask s = base | sub;
      Mask b = s;
      for (int i = 0; i < n_; ++i) {
        Mask bit = Mask{1} << i;
        if (!(free & bit) || (s & bit)) continue;
        Mask cand = best[s | bit];
        if (compare(cand, b) < 0) b = cand;
      }
      best[s] = b;
      strong[s] = compare(b, s) >= 0;
      if (sub == 0) break;
    }
    return strong;
  }

 private:
  ElementSet ids_;
  int n_ = 0;
  std::vector<std::int32_t> e_;
  Rational alpha_, beta_;
  std::map<std::pair<long long, long long>, int> cache_;
};

// Predicates that must hold for every alpha in the range: for an interval,
// linearity reduces this to both closed endpoints.
std::vector<Rational> endpoints(const AlphaSpec& alpha) {
  if (alpha.is_exact()) return {alpha.value()};
  return {alpha.lo(), alpha.hi()};
}

}  // namespace

DInResult d_in(const Structure& n, const ElementSet& a, const AlphaSpec& alpha,
               const Rational& beta) {
  require_elements(n, a);
  const ElementSet ids = n.elements();
  if (ids.size() > static_cast<std::size_t>(kMaxElements)) {
    throw BudgetExceeded("oracle limited to " + std::to_string(kMaxElements) + " elements");
  }
  // Group the supersets of a by (size, instance count); remember the least
  // mask of each group.
  Table t(n, alpha.is_exact() ? alpha.value() : alpha.lo(), beta);
  const Mask base = t.mask_of(a);
  const Mask free = t.full() & ~base;
  std::map<std::pair<long long, long long>, Mask> groups;
  for (Mask sub = 0;; sub = (sub - free) & free) {
    Mask m = base | sub;
    auto key = std::make_pair<long long, long long>(std::popcount(m), t.e(m));
    groups.try_emplace(key, m);
    if (sub == free) break;
  }
  std::vector<std::pair<DimValue, Mask>> values;
  for (auto& [key, m] : groups) {
    values.push_back({DimValue(beta * key.first, Rational(key.second)), m});
  }
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < values.size(); ++i) {
    bool minimal = true;
    try {
      for (std::size_t j = 0; j < values.size() && minimal; ++j) {
        if (cmp(values[i].first, values[j].first, alpha) == Ordering::GT) minimal = false;
      }
    } catch (const InsufficientPrecision&) {
      minimal = false;
    }
    if (!minimal) continue;
    if (!pick || std::popcount(values[i].second) < std::popcount(values[*pick].second)) pick = i;
  }
  if (!pick) throw InsufficientPrecision("oracle: no minimum on interval " + alpha.describe());
  return {values[*pick].first, t.set_of(values[*pick].second)};
}

bool is_strong(const ElementSet& a, const Structure& n, const AlphaSpec& alpha,
               const Rational& beta) {
  for (const Rational& x : endpoints(alpha)) {
    Table t(n, x, beta);
    Mask m = t.mask_of(a);
    if (!t.strong_in(m, t.full())[m]) return false;
  }
  return true;
}

bool is_in_K(const Structure& s, const AlphaSpec& alpha, const Rational& beta) {
  for (const Rational& x : endpoints(alpha)) {
    Table t(s, x, beta);
    for (Mask m = 0; m <= t.full(); ++m) {
      if (t.compare(m, 0) < 0) return false;
      if (m == t.full()) break;
    }
  }
  return true;
}

std::vector<ElementSet> strong_subsets(const Structure& n, const AlphaSpec& alpha,
                                       const Rational& beta) {
  std::vector<char> all;
  std::optional<Table> last;
  for (const Rational& x : endpoints(alpha)) {
    Table t(n, x, beta);
    std::vector<char> s = t.strong_in(0, t.full());
    if (all.empty()) {
      all = s;
    } else {
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = all[i] && s[i];
    }
    last.emplace(std::move(t));
  }
  std::vector<ElementSet> out;
  for (Mask m = 0; m < all.size(); ++m) {
    if (all[m]) out.push_back(last->set_of(m));
  }
  return out;
}

namespace {

// Whether base is intrinsic in top for every alpha in the range: no A' with
// base ⊆ A' ⊊ top strong in top.
bool intrinsic_mask(std::vector<Table>& tables, Mask base, Mask top) {
  std::vector<char> strong_any;
  for (Table& t : tables) {
    std::vector<char> s = t.strong_in(base, top);
    if (strong_any.empty()) {
      strong_any = s;
    } else {
      for (std::size_t i = 0; i < s.size(); ++i) strong_any[i] = strong_any[i] && s[i];
    }
  }
  const Mask free = top & ~base;
  for (Mask sub = 0;; sub = (sub - free) & free) {
    Mask m = base | sub;
    if (m != top && strong_any[m]) return false;
    if (sub == free) break;
  }
  return true;
}

std::vector<Table> tables_for(const Structure& s, const AlphaSpec& alpha, const Rational& beta) {
  std::vector<Table> out;
  for (const Rational& x : endpoints(alpha)) out.emplace_back(s, x, beta);
  return out;
}

}  // namespace

bool is_intrinsic(const ElementSet& a, const Structure& b, const AlphaSpec& alpha,
                  const Rational& beta) {
  auto tables = tables_for(b, alpha, beta);
  return intrinsic_mask(tables, tables[0].mask_of(a), tables[0].full());
}

ElementSet icl_definitional(const Structure& m, const ElementSet& a, const AlphaSpec& alpha,
                            const Rational& beta, int* rounds) {
  auto tables = tables_for(m, alpha, beta);
  Table& t0 = tables[0];
  Mask cur = t0.mask_of(a);
  int count = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    const int limit = t0.size() - std::popcount(cur) + 1;
    for (int mm = 1; mm <= limit && !grew; ++mm) {
      ++count;
      // icl^mm: union of intrinsic B over cur with |B - cur| < mm.
      Mask uni = cur;
      const Mask free = t0.full() & ~cur;
      for (Mask sub = 0;; sub = (sub - free) & free) {
        if (std::popcount(sub) < mm && intrinsic_mask(tables, cur, cur | sub)) uni |= sub;
        if (sub == free) break;
      }
      if (uni != cur) {
        cur = uni;
        grew = true;
      }
    }
  }
  if (rounds) *rounds = count;
  return t0.set_of(cur);
}

ElementSet icl_intersection(const Structure& m, const ElementSet& a, const AlphaSpec& alpha,
                            const Rational& beta) {
  ElementSet out = m.elements();
  for (const ElementSet& s : strong_subsets(m, alpha, beta)) {
    if (is_subset(a, s)) out = set_intersection(out, s);
  }
  return out;
}

bool is_primitive(const ElementSet& b, const Structure& c, const AlphaSpec& alpha,
                  const Rational& beta) {
  require_elements(c, b);
  if (!oracle::is_strong(b, c, alpha, beta)) throw NotStrong("base is not strong in the extension");
  for (const ElementSet& s : strong_subsets(c, alpha, beta)) {
    if (s.size() > b.size() && s.size() < c.size() && is_subset(b, s)) return false;
  }
  return true;
}

bool pointed_minimal(const Structure& s, const ElementSet& base, const AlphaSpec& alpha,
                     const Rational& beta) {
  require_elements(s, base);
  const DimValue whole = delta(s, beta);
  Table t(s, alpha.is_exact() ? alpha.value() : alpha.lo(), beta);
  const Mask bm = t.mask_of(base);
  const Mask free = t.full() & ~bm;
  std::map<std::pair<int, std::int64_t>, bool> above;
  for (Mask sub = 0;; sub = (sub - free) & free) {
    if (sub != 0 && sub != free) {
      const Mask m = bm | sub;
      const std::pair<int, std::int64_t> key(std::popcount(m), t.e(m));
      auto it = above.find(key);
      if (it == above.end()) {
        DimValue part(beta * key.first, Rational(key.second));
        it = above.emplace(key, cmp(part, whole, alpha) == Ordering::GT).first;
      }
      if (!it->second) return false;
    }
    if (sub == free) break;
  }
  return true;
}

bool in_pointed_class(const Structure& s, ElementId a, ElementId b, ElementId e,
                      const AlphaSpec& alpha, const Rational& beta) {
  const ElementSet base = make_set({a, b});
  const ElementSet triple = make_set({a, b, e});
  if (triple.size() != 3) return false;
  require_elements(s, triple);
  if (!oracle::is_in_K(s, alpha, beta)) return false;
  if (e_count(induced(s, triple)) != 0) return false;
  if (!pointed_minimal(s, base, alpha, beta)) return false;
  const DimValue rel = delta(s, beta) - delta(induced(s, base), beta);
  return cmp(rel, DimValue::constant(-1), alpha) == Ordering::GT &&
         cmp(rel, DimValue{}, alpha) != Ordering::GT;
}

}  // namespace predim::oracle
