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

#include "predim/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace predim {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Compares coeff * n^-alpha with 1: returns the sign of p - 1.
int compare_with_one(const SampleSpec& spec) {
  using boost::multiprecision::pow;
  const BigInt a = boost::multiprecision::numerator(spec.alpha);
  const BigInt b = boost::multiprecision::denominator(spec.alpha);
  const BigInt cn = boost::multiprecision::numerator(spec.coeff);
  const BigInt cd = boost::multiprecision::denominator(spec.coeff);
  if (b > 4096 || abs(a) > 4096) throw InvalidArgument("alpha has too large a numerator or denominator");
  const unsigned be = static_cast<unsigned>(b);
  const unsigned ae = static_cast<unsigned>(abs(a));
  // p > 1  <=>  cn^b > cd^b * n^a.
  BigInt lhs = pow(cn, be);
  BigInt rhs = pow(cd, be);
  const BigInt nb = BigInt(spec.n);
  if (a >= 0) {
    rhs *= pow(nb, ae);
  } else {
    lhs *= pow(nb, ae);
  }
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

struct Graph {
  std::vector<std::vector<int>> nb;

  bool adjacent(int u, int v) const {
    return std::binary_search(nb[u].begin(), nb[u].end(), v);
  }
};

Graph to_graph(const Structure& s) {
  if (!s.signature().is_graph()) throw InvalidArgument("census needs graphs");
  std::map<ElementId, int> index;
  for (ElementId v : s.elements()) index.emplace(v, static_cast<int>(index.size()));
  Graph g{std::vector<std::vector<int>>(s.size())};
  for (const Instance& inst : s.instances(0)) {
    const int u = index.at(inst[0]);
    const int v = index.at(inst[1]);
    if (u == v) continue;
    g.nb[u].push_back(v);
    g.nb[v].push_back(u);
  }
  for (auto& row : g.nb) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return g;
}

// Cliques of size k, counted once each via increasing vertex order.
std::uint64_t count_cliques(const Graph& g, int k, Budget& budget) {
  if (k == 1) return g.nb.size();
  std::uint64_t total = 0;
  std::vector<int> cand;
  auto grow = [&](auto&& self, const std::vector<int>& pool, int depth) -> void {
    budget.charge();
    if (depth == k) {
      ++total;
      return;
    }
    if (depth == k - 1) {
      total += pool.size();
      budget.charge(pool.size());
      return;
    }
    for (int v : pool) {
      std::vector<int> next;
      for (int w : g.nb[v]) {
        if (w > v && std::binary_search(pool.begin(), pool.end(), w)) next.push_back(w);
      }
      self(self, next, depth + 1);
    }
  };
  for (std::size_t v = 0; v < g.nb.size(); ++v) {
    std::vector<int> pool;
    for (int w : g.nb[v]) {
      if (w > static_cast<int>(v)) pool.push_back(w);
    }
    grow(grow, pool, 1);
  }
  return total;
}

}  // namespace

double edge_probability(const SampleSpec& spec) {
  if (spec.n == 0) throw InvalidArgument("n must be at least 1");
  if (spec.coeff < 0) throw InvalidArgument("coefficient must be nonnegative");
  if (spec.coeff == 0) return 0.0;
  const int sign = compare_with_one(spec);
  if (sign > 0) {
    throw ProbabilityOverflow("edge probability " + to_string(spec.coeff) + " * " +
                              std::to_string(spec.n) + "^-(" + to_string(spec.alpha) +
                              ") exceeds 1");
  }
  if (sign == 0) return 1.0;
  return std::min(1.0, static_cast<double>(spec.coeff) *
                           std::pow(static_cast<double>(spec.n), -static_cast<double>(spec.alpha)));
}

Structure sample(const SampleSpec& spec) {
  const double p = edge_probability(spec);
  std::vector<std::pair<ElementId, ElementId>> edges;
  const std::uint64_t key = splitmix64(spec.seed);
  // Pair {i < j} has index j(j-1)/2 + i, which does not depend on n.
  for (std::size_t j = 1; j < spec.n; ++j) {
    const std::uint64_t row = static_cast<std::uint64_t>(j) * (j - 1) / 2;
    for (std::size_t i = 0; i < j; ++i) {
      // 53 random bits mapped into [0, 1).
      const double u = static_cast<double>(splitmix64(key ^ splitmix64(row + i)) >> 11) * 0x1.0p-53;
      if (u < p) edges.emplace_back(i, j);
    }
  }
  return Structure::graph(spec.n, edges);
}

std::uint64_t census(const Structure& m, const Structure& h, Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  if (h.size() > 6) throw InvalidArgument("pattern has more than 6 vertices");
  const Graph gm = to_graph(m);
  const Graph gh = to_graph(h);
  const int v = static_cast<int>(h.size());
  if (v == 0) return 1;
  if (v > static_cast<int>(m.size())) return 0;

  std::size_t edges = 0;
  for (const auto& row : gh.nb) edges += row.size();
  if (edges == static_cast<std::size_t>(v * (v - 1))) return count_cliques(gm, v, b);

  // Place pattern vertices so each one after the first has as many placed
  // neighbours as possible.
  std::vector<int> order;
  std::vector<bool> placed(v, false);
  for (int step = 0; step < v; ++step) {
    int best = -1;
    int best_links = -1;
    for (int x = 0; x < v; ++x) {
      if (placed[x]) continue;
      int links = 0;
      for (int y : gh.nb[x]) links += placed[y];
      if (links > best_links || (links == best_links && gh.nb[x].size() > gh.nb[best].size())) {
        best = x;
        best_links = links;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }

  std::set<std::vector<int>> seen;
  std::vector<int> image(v, -1);
  std::vector<bool> used(gm.nb.size(), false);
  std::vector<int> all(gm.nb.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  auto place = [&](auto&& self, int depth) -> void {
    b.charge();
    if (depth == v) {
      std::vector<int> key(image);
      std::sort(key.begin(), key.end());
      seen.insert(std::move(key));
      return;
    }
    const int x = order[depth];
    const std::vector<int>* pool = &all;
    for (int y : gh.nb[x]) {
      if (image[y] >= 0) {
        pool = &gm.nb[image[y]];
        break;
      }
    }
    for (int c : *pool) {
      if (used[c]) continue;
      bool ok = true;
      for (int y : gh.nb[x]) {
        if (image[y] >= 0 && !gm.adjacent(c, image[y])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[x] = c;
      used[c] = true;
      self(self, depth + 1);
      used[c] = false;
      image[x] = -1;
    }
  };
  place(place, 0);
  return seen.size();
}

double expected_count(const SampleSpec& spec, const Structure& h) {
  const double p = edge_probability(spec);
  const std::size_t v = h.size();
  if (v > spec.n) return 0.0;
  double choose = 1.0;
  for (std::size_t i = 0; i < v; ++i) {
    choose *= static_cast<double>(spec.n - i) / static_cast<double>(i + 1);
  }
  double factorial = 1.0;
  for (std::size_t i = 2; i <= v; ++i) factorial *= static_cast<double>(i);
  const double automorphisms = static_cast<double>(embeddings_over(h, {}, h).size());
  return choose * (factorial / automorphisms) *
         std::pow(p, static_cast<double>(h.instance_count()));
}

Structure named_pattern(std::string_view name) {
  if (name == "edge") return named_pattern("K2");
  if (name == "triangle") return named_pattern("K3");
  if (name.size() < 2) throw InvalidArgument("unknown pattern '" + std::string(name) + "'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(std::string(name.substr(1)), &used);
    if (used != name.size() - 1) throw InvalidArgument("");
  } catch (const std::exception&) {
    throw InvalidArgument("unknown pattern '" + std::string(name) + "'");
  }
  if (n < 1 || n > 6) throw InvalidArgument("pattern size must be in 1..6");
  std::vector<std::pair<ElementId, ElementId>> edges;
  switch (name[0]) {
    case 'K':
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      }
      break;
    case 'P':
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'C':
      if (n < 3) throw InvalidArgument("cycles need at least 3 vertices");
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      break;
    case 'E':
      break;
    default:
      throw InvalidArgument("unknown pattern '" + std::string(name) + "'");
  }
  return Structure::graph(n, edges);
}

}  // namespace predim
