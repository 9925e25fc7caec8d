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

#include "predim/minimizer.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>

namespace predim {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::automatic: return "automatic";
    case Strategy::decomposition: return "decomposition";
    case Strategy::flow: return "flow";
    case Strategy::exhaustive: return "exhaustive";
  }
  return "?";
}

Strategy parse_strategy(const std::string& name) {
  for (Strategy s : {Strategy::automatic, Strategy::decomposition, Strategy::flow,
                     Strategy::exhaustive}) {
    if (name == to_string(s)) return s;
  }
  throw InvalidArgument("unknown strategy '" + name + "'");
}

Affine relative_value(const Hypergraph& h, const std::vector<char>& base,
                      const std::vector<char>& mask) {
  Affine a;
  for (int v = 0; v < h.size(); ++v) a.n += (mask[v] ? 1 : 0) - (base[v] ? 1 : 0);
  a.e = h.edges_within(mask) - h.edges_within(base);
  return a;
}

namespace {

using Key = Weights::Key;

enum : char { kFree = 0, kIn = 1, kOut = 2 };

struct TooLarge {};

std::vector<char> initial_status(const Hypergraph& h, const std::vector<char>& base,
                                 const std::vector<char>& allowed) {
  std::vector<char> st(h.size(), kFree);
  for (int v = 0; v < h.size(); ++v) {
    if (base[v] && !allowed[v]) throw InvalidArgument("minimize: base not inside allowed set");
    st[v] = base[v] ? kIn : (allowed[v] ? kFree : kOut);
  }
  return st;
}

bool better(const Key& ka, std::int64_t na, const Key& kb, std::int64_t nb) {
  return ka < kb || (ka == kb && na < nb);
}

// ---------------------------------------------------------------------------
// Plain enumeration.

std::vector<int> solve_exhaustive(const Hypergraph& h, const Weights& w,
                                  const Weights::Point& p, const std::vector<char>& st,
                                  Budget* budget) {
  std::vector<int> free;
  for (int v = 0; v < h.size(); ++v) {
    if (st[v] == kFree) free.push_back(v);
  }
  const int k = static_cast<int>(free.size());
  if (k > 30) throw BudgetExceeded("exhaustive minimization limited to 30 free elements");
  std::vector<int> pos(h.size(), -1);
  for (int i = 0; i < k; ++i) pos[free[i]] = i;

  struct Live {
    int missing;
    int mult;
  };
  std::vector<Live> live;
  std::vector<std::vector<int>> inc(k);
  for (const auto& e : h.edges()) {
    bool dead = false;
    int missing = 0;
    for (int v : e.members) {
      dead = dead || st[v] == kOut;
      missing += st[v] == kFree;
    }
    if (dead || missing == 0) continue;
    for (int v : e.members) {
      if (st[v] == kFree) inc[pos[v]].push_back(static_cast<int>(live.size()));
    }
    live.push_back({missing, e.mult});
  }

  std::uint64_t mask = 0, best_mask = 0;
  Affine cur, best;
  Key best_key = w.key(best, p);
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t step = 1; step < total; ++step) {
    if (budget && (step & 4095) == 0) budget->charge(4096);
    int bit = std::countr_zero(step);
    std::uint64_t flag = std::uint64_t{1} << bit;
    mask ^= flag;
    if (mask & flag) {
      ++cur.n;
      for (int id : inc[bit]) {
        if (--live[id].missing == 0) cur.e += live[id].mult;
      }
    } else {
      --cur.n;
      for (int id : inc[bit]) {
        if (live[id].missing++ == 0) cur.e -= live[id].mult;
      }
    }
    Key kc = w.key(cur, p);
    if (better(kc, cur.n, best_key, best.n) ||
        (kc == best_key && cur.n == best.n && mask < best_mask)) {
      best = cur;
      best_key = kc;
      best_mask = mask;
    }
  }
  std::vector<int> chosen;
  for (int i = 0; i < k; ++i) {
    if (best_mask >> i & 1) chosen.push_back(free[i]);
  }
  return chosen;
}

// ---------------------------------------------------------------------------
// Decomposition: split the free elements into independent components,
// merge twins (elements exchanged by a symmetry of the objective; the
// minimal minimizer takes all or none of each class), branch on cut units.

class Decomposer {
 public:
  Decomposer(const Hypergraph& h, const Weights& w, const Weights::Point& p,
             std::vector<char> st, Budget* budget, std::uint64_t node_cap)
      : h_(h),
        w_(w),
        p_(p),
        st_(std::move(st)),
        budget_(budget),
        node_cap_(node_cap),
        mark_(h.size(), 0),
        edge_seen_(h.edges().size(), 0) {}

  std::vector<int> run() {
    std::vector<int> free;
    for (int v = 0; v < h_.size(); ++v) {
      if (st_[v] == kFree) free.push_back(v);
    }
    std::vector<int> chosen;
    for (const auto& comp : components(free)) {
      Result r = solve(comp);
      chosen.insert(chosen.end(), r.chosen.begin(), r.chosen.end());
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

 private:
  struct Result {
    Affine value;
    std::vector<int> chosen;
  };
  struct Req {
    std::uint32_t units;
    int mult;
  };

  static constexpr int kLeafUnits = 16;

  bool alive(int e) const {
    for (int v : h_.edges()[e].members) {
      if (st_[v] == kOut) return false;
    }
    return true;
  }

  void charge() {
    if (++nodes_ > node_cap_) throw TooLarge{};
    if (budget_) budget_->charge();
  }

  std::vector<std::vector<int>> components(const std::vector<int>& verts) {
    std::vector<int> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> local(h_.size(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int v : verts) {
      for (int e : h_.incident(v)) {
        if (!alive(e)) continue;
        for (int u : h_.edges()[e].members) {
          if (st_[u] == kFree && local[u] >= 0) parent[find(local[u])] = find(local[v]);
        }
      }
    }
    std::vector<std::vector<int>> out;
    std::vector<int> slot(verts.size(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      int r = find(static_cast<int>(i));
      if (slot[r] < 0) {
        slot[r] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[slot[r]].push_back(verts[i]);
    }
    return out;
  }

  // Signature of x's live edges with y replaced by a marker.
  std::vector<std::pair<std::vector<int>, int>> signature(int x, int y) const {
    std::vector<std::pair<std::vector<int>, int>> sig;
    for (int e : h_.incident(x)) {
      if (!alive(e)) continue;
      std::vector<int> others;
      for (int u : h_.edges()[e].members) {
        if (u == x || st_[u] != kFree) continue;
        others.push_back(u == y ? -1 : u);
      }
      std::sort(others.begin(), others.end());
      sig.emplace_back(std::move(others), h_.edges()[e].mult);
    }
    std::sort(sig.begin(), sig.end());
    return sig;
  }

  std::vector<std::vector<int>> twin_classes(const std::vector<int>& comp) const {
    std::vector<std::vector<int>> classes;
    std::vector<std::int64_t> degree(comp.size(), 0);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int e : h_.incident(comp[i])) {
        if (alive(e)) degree[i] += h_.edges()[e].mult * 1000 + 1;
      }
    }
    std::vector<std::size_t> class_of_rep;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      bool placed = false;
      for (auto& cls : classes) {
        int rep = cls.front();
        std::size_t ri = std::find(comp.begin(), comp.end(), rep) - comp.begin();
        if (degree[ri] != degree[i]) continue;
        if (signature(rep, comp[i]) == signature(comp[i], rep)) {
          cls.push_back(comp[i]);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({comp[i]});
    }
    return classes;
  }

  // delta(chosen) relative to the current status: beta per element, minus
  // alpha per live edge whose free members all lie in `chosen`.
  Affine value_of(const std::vector<int>& chosen) {
    Affine a{static_cast<std::int64_t>(chosen.size()), 0};
    for (int v : chosen) mark_[v] = 1;
    std::vector<int> seen;
    for (int v : chosen) {
      for (int e : h_.incident(v)) {
        if (edge_seen_[e] || !alive(e)) continue;
        edge_seen_[e] = 1;
        seen.push_back(e);
        bool complete = true;
        for (int u : h_.edges()[e].members) {
          if (st_[u] == kFree && !mark_[u]) complete = false;
        }
        if (complete) a.e += h_.edges()[e].mult;
      }
    }
    for (int e : seen) edge_seen_[e] = 0;
    for (int v : chosen) mark_[v] = 0;
    return a;
  }

  // Decides elements whose marginal value settles them: an element whose
  // every live edge could complete still does not pay for itself is in no
  // minimal minimizer; one that already pays through edges completed by
  // included elements alone is in every minimizer (marginals only shrink as
  // the set grows).
  Result solve(const std::vector<int>& comp) {
    charge();
    std::vector<int> touched, forced;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v : comp) {
        if (st_[v] != kFree) continue;
        std::int64_t deg = 0, sure = 0;
        for (int e : h_.incident(v)) {
          if (!alive(e)) continue;
          const auto& edge = h_.edges()[e];
          deg += edge.mult;
          bool others_in = true;
          for (int u : edge.members) {
            if (u != v && st_[u] != kIn) others_in = false;
          }
          if (others_in) sure += edge.mult;
        }
        if (w_.key({1, deg}, p_) >= Key{}) {
          st_[v] = kOut;
        } else if (w_.key({1, sure}, p_) < Key{}) {
          st_[v] = kIn;
          forced.push_back(v);
        } else {
          continue;
        }
        touched.push_back(v);
        changed = true;
      }
    }
    Result res;
    if (touched.empty()) {
      res = core(comp);
    } else {
      std::vector<int> remaining;
      for (int v : comp) {
        if (st_[v] == kFree) remaining.push_back(v);
      }
      res = solve_all(remaining);
      res.chosen.insert(res.chosen.end(), forced.begin(), forced.end());
      for (int v : touched) st_[v] = kFree;
    }
    res.value = value_of(res.chosen);
    return res;
  }

  Result core(const std::vector<int>& comp) {
    std::vector<std::vector<int>> units = twin_classes(comp);
    const int nu = static_cast<int>(units.size());
    std::vector<int> unit_of(h_.size(), -1);
    for (int i = 0; i < nu; ++i) {
      for (int v : units[i]) unit_of[v] = i;
    }
    // Live edges touching the component, as unit requirements.
    std::vector<Req> reqs;
    std::vector<char> seen(h_.edges().size(), 0);
    std::vector<std::vector<int>> unit_adj(nu);
    for (int v : comp) {
      for (int e : h_.incident(v)) {
        if (seen[e] || !alive(e)) continue;
        seen[e] = 1;
        std::uint32_t req = 0;
        std::vector<int> us;
        for (int u : h_.edges()[e].members) {
          if (st_[u] != kFree) continue;
          if (unit_of[u] < kLeafUnits) req |= std::uint32_t{1} << unit_of[u];
          us.push_back(unit_of[u]);
        }
        for (int a : us) {
          for (int b : us) {
            if (a != b) unit_adj[a].push_back(b);
          }
        }
        reqs.push_back({req, h_.edges()[e].mult});
      }
    }
    for (auto& adj : unit_adj) {
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }

    if (nu <= kLeafUnits) return leaf(units, reqs);
    return branch(comp, units, unit_adj);
  }

  Result leaf(const std::vector<std::vector<int>>& units, const std::vector<Req>& reqs) {
    const int nu = static_cast<int>(units.size());
    std::vector<std::vector<int>> inc(nu);
    std::vector<int> missing(reqs.size());
    for (std::size_t r = 0; r < reqs.size(); ++r) {
      missing[r] = std::popcount(reqs[r].units);
      for (int u = 0; u < nu; ++u) {
        if (reqs[r].units >> u & 1) inc[u].push_back(static_cast<int>(r));
      }
    }
    std::uint32_t mask = 0, best_mask = 0;
    Affine cur, best;
    Key best_key = w_.key(best, p_);
    const std::uint32_t total = std::uint32_t{1} << nu;
    for (std::uint32_t step = 1; step < total; ++step) {
      int bit = std::countr_zero(step);
      std::uint32_t flag = std::uint32_t{1} << bit;
      mask ^= flag;
      const std::int64_t size = static_cast<std::int64_t>(units[bit].size());
      if (mask & flag) {
        cur.n += size;
        for (int r : inc[bit]) {
          if (--missing[r] == 0) cur.e += reqs[r].mult;
        }
      } else {
        cur.n -= size;
        for (int r : inc[bit]) {
          if (missing[r]++ == 0) cur.e -= reqs[r].mult;
        }
      }
      Key kc = w_.key(cur, p_);
      if (better(kc, cur.n, best_key, best.n)) {
        best = cur;
        best_key = kc;
        best_mask = mask;
      }
    }
    Result res{best, {}};
    for (int u = 0; u < nu; ++u) {
      if (best_mask >> u & 1) res.chosen.insert(res.chosen.end(), units[u].begin(), units[u].end());
    }
    return res;
  }

  // Articulation units of the unit graph.
  static std::vector<int> articulation(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> cut(n, 0);
    int timer = 0;
    auto dfs = [&](auto&& self, int v, int parent) -> void {
      disc[v] = low[v] = timer++;
      int children = 0;
      for (int u : adj[v]) {
        if (disc[u] < 0) {
          ++children;
          self(self, u, v);
          low[v] = std::min(low[v], low[u]);
          if (parent >= 0 && low[u] >= disc[v]) cut[v] = 1;
        } else if (u != parent) {
          low[v] = std::min(low[v], disc[u]);
        }
      }
      if (parent < 0 && children > 1) cut[v] = 1;
    };
    for (int v = 0; v < n; ++v) {
      if (disc[v] < 0) dfs(dfs, v, -1);
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
      if (cut[v]) out.push_back(v);
    }
    return out;
  }

  std::int64_t live_degree(int v) const {
    std::int64_t d = 0;
    for (int e : h_.incident(v)) {
      if (alive(e)) d += h_.edges()[e].mult;
    }
    return d;
  }

  Result branch(const std::vector<int>& comp, const std::vector<std::vector<int>>& units,
                const std::vector<std::vector<int>>& unit_adj) {
    const int nu = static_cast<int>(units.size());
    int pick = -1;
    std::size_t pick_score = std::numeric_limits<std::size_t>::max();
    for (int a : articulation(unit_adj)) {
      // Size (in elements) of the largest piece left after removing unit a.
      std::vector<char> seen(nu, 0);
      seen[a] = 1;
      std::size_t worst = 0;
      for (int s = 0; s < nu; ++s) {
        if (seen[s]) continue;
        std::size_t size = 0;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          size += units[x].size();
          for (int y : unit_adj[x]) {
            if (!seen[y]) {
              seen[y] = 1;
              stack.push_back(y);
            }
          }
        }
        worst = std::max(worst, size);
      }
      if (worst < pick_score) {
        pick_score = worst;
        pick = a;
      }
    }
    if (pick < 0) {
      std::int64_t best_deg = -1;
      for (int u = 0; u < nu; ++u) {
        std::int64_t d = live_degree(units[u].front()) * static_cast<std::int64_t>(units[u].size());
        if (d > best_deg) {
          best_deg = d;
          pick = u;
        }
      }
    }
    const std::vector<int>& unit = units[pick];
    std::vector<int> rest;
    for (int v : comp) {
      if (std::find(unit.begin(), unit.end(), v) == unit.end()) rest.push_back(v);
    }

    // Unit excluded.
    for (int v : unit) st_[v] = kOut;
    Result out = solve_all(rest);
    for (int v : unit) st_[v] = kFree;
    out.value = value_of(out.chosen);
    const Key out_key = w_.key(out.value, p_);

    // Unit included, unless a lower bound rules it out.
    __int128 bound = w_.key(value_of(unit), p_).value;
    for (int v : rest) {
      __int128 term = static_cast<__int128>(w_.beta_scaled()) -
                      static_cast<__int128>(p_.alpha) * live_degree(v);
      if (term < 0) bound += term;
    }
    if (bound > out_key.value) return out;
    for (int v : unit) st_[v] = kIn;
    Result in = solve_all(rest);
    for (int v : unit) st_[v] = kFree;
    in.chosen.insert(in.chosen.end(), unit.begin(), unit.end());
    in.value = value_of(in.chosen);
    if (better(w_.key(in.value, p_), in.value.n, out_key, out.value.n)) return in;
    return out;
  }

  Result solve_all(const std::vector<int>& verts) {
    Result total;
    for (const auto& c : components(verts)) {
      Result r = solve(c);
      total.value = total.value + r.value;
      total.chosen.insert(total.chosen.end(), r.chosen.begin(), r.chosen.end());
    }
    return total;
  }

  const Hypergraph& h_;
  const Weights& w_;
  Weights::Point p_;
  std::vector<char> st_;
  Budget* budget_;
  std::uint64_t node_cap_;
  std::uint64_t nodes_ = 0;
  std::vector<char> mark_;
  std::vector<char> edge_seen_;
};

// ---------------------------------------------------------------------------
// Max-closure by min cut: source -> edge node (alpha * mult), edge node ->
// free member (infinite), free element -> sink (beta). The source side of
// the minimal minimum cut is the minimal minimizer.

class Dinic {
 public:
  explicit Dinic(int n) : adj_(n), level_(n), it_(n) {}

  void add(int u, int v, Key cap) {
    adj_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap});
    adj_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, Key{}});
  }

  void run(int s, int t, Budget* budget) {
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (true) {
        if (budget) budget->charge();
        Key f = dfs(s, t, kInf);
        if (f == Key{}) break;
      }
    }
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int a : adj_[u]) {
        if (arcs_[a].cap > Key{} && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

  static constexpr Key kInf{std::int64_t{1} << 60, 0};

 private:
  struct Arc {
    int to;
    Key cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int a : adj_[u]) {
        if (arcs_[a].cap > Key{} && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Key dfs(int u, int t, Key pushed) {
    if (u == t) return pushed;
    for (int& i = it_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
      int a = adj_[u][i];
      Arc& arc = arcs_[a];
      if (arc.cap > Key{} && level_[arc.to] == level_[u] + 1) {
        Key got = dfs(arc.to, t, std::min(pushed, arc.cap));
        if (got > Key{}) {
          arc.cap = arc.cap - got;
          arcs_[a ^ 1].cap = arcs_[a ^ 1].cap + got;
          return got;
        }
      }
    }
    return Key{};
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> it_;
};

std::vector<int> solve_flow(const Hypergraph& h, const Weights& w, const Weights::Point& p,
                            const std::vector<char>& st, Budget* budget) {
  std::vector<int> node(h.size(), -1);
  int count = 2;
  std::vector<int> free;
  for (int v = 0; v < h.size(); ++v) {
    if (st[v] == kFree) {
      node[v] = count++;
      free.push_back(v);
    }
  }
  std::vector<std::pair<int, int>> live;  // (edge index, node)
  for (int e = 0; e < static_cast<int>(h.edges().size()); ++e) {
    bool dead = false, touches = false;
    for (int v : h.edges()[e].members) {
      dead = dead || st[v] == kOut;
      touches = touches || st[v] == kFree;
    }
    if (!dead && touches) live.emplace_back(e, count++);
  }
  Dinic g(count);
  const Key beta = w.element_key(p);
  const Key alpha = w.instance_key(p);
  for (int v : free) g.add(node[v], 1, beta);
  for (auto [e, n] : live) {
    const auto& edge = h.edges()[e];
    g.add(0, n, Key{alpha.value * edge.mult, alpha.eps * edge.mult});
    for (int v : edge.members) {
      if (st[v] == kFree) g.add(n, node[v], Dinic::kInf);
    }
  }
  g.run(0, 1, budget);
  std::vector<char> side = g.reachable(0);
  std::vector<int> chosen;
  for (int v : free) {
    if (side[node[v]]) chosen.push_back(v);
  }
  return chosen;
}

}  // namespace

Minimum minimize(const Hypergraph& h, const Weights& w, const std::vector<char>& base,
                 const std::vector<char>& allowed, const MinimizeOptions& options) {
  const std::vector<char> st = initial_status(h, base, allowed);
  std::int64_t free_count = std::count(st.begin(), st.end(), kFree);

  auto solve_at = [&](const Weights::Point& p) {
    std::vector<int> chosen;
    switch (options.strategy) {
      case Strategy::exhaustive:
        chosen = solve_exhaustive(h, w, p, st, options.budget);
        break;
      case Strategy::flow:
        chosen = solve_flow(h, w, p, st, options.budget);
        break;
      case Strategy::decomposition:
        chosen = Decomposer(h, w, p, st, options.budget,
                            std::numeric_limits<std::uint64_t>::max())
                     .run();
        break;
      case Strategy::automatic:
        if (free_count > 64) {
          chosen = solve_flow(h, w, p, st, options.budget);
        } else {
          try {
            chosen = Decomposer(h, w, p, st, options.budget, 20000).run();
          } catch (const TooLarge&) {
            chosen = solve_flow(h, w, p, st, options.budget);
          }
        }
        break;
    }
    Minimum m{base, {}};
    for (int v : chosen) m.mask[v] = 1;
    m.value = relative_value(h, base, m.mask);
    return m;
  };

  const auto& points = w.points();
  Minimum first = solve_at(points[0]);
  for (std::size_t i = 1; i < points.size(); ++i) {
    Minimum other = solve_at(points[i]);
    if (!(other.value == first.value)) {
      throw InsufficientPrecision("the minimizer differs across the alpha interval " +
                                  w.alpha().describe() + "; narrow it");
    }
  }
  return first;
}

}  // namespace predim
