#pragma once

// Naive reference implementations. Exponential on purpose; n <= 10.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "kess/graph.hpp"

namespace oracle {

using kess::Graph;
using Mask = std::uint32_t;

inline std::vector<Mask> adjacency(const Graph &g) {
  std::vector<Mask> adj(g.order(), 0);
  for (const auto &e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

inline bool stable(const std::vector<Mask> &adj, Mask s) {
  for (std::size_t v = 0; v < adj.size(); ++v)
    if ((s >> v & 1) && (adj[v] & s))
      return false;
  return true;
}

inline bool clique(const std::vector<Mask> &adj, Mask s) {
  for (std::size_t v = 0; v < adj.size(); ++v)
    if ((s >> v & 1) && ((s & ~(Mask{1} << v)) & ~adj[v]))
      return false;
  return true;
}

inline Mask dominated(const std::vector<Mask> &adj, Mask s) {
  Mask d = s;
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (s >> v & 1)
      d |= adj[v];
  return d;
}

inline int alpha(const Graph &g) {
  auto adj = adjacency(g);
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << g.order()); ++s)
    if (stable(adj, s))
      best = std::max(best, std::popcount(s));
  return best;
}

inline bool maximal_stable(const std::vector<Mask> &adj, Mask s, Mask all) {
  return stable(adj, s) && dominated(adj, s) == all;
}

inline int ind_dom(const Graph &g) {
  auto adj = adjacency(g);
  const Mask all = (Mask{1} << g.order()) - 1;
  int best = g.order();
  for (Mask s = 0; s <= all; ++s)
    if (maximal_stable(adj, s, all))
      best = std::min(best, std::popcount(s));
  return best;
}

inline int gamma(const Graph &g) {
  auto adj = adjacency(g);
  const Mask all = (Mask{1} << g.order()) - 1;
  int best = g.order();
  for (Mask s = 0; s <= all; ++s)
    if (dominated(adj, s) == all)
      best = std::min(best, std::popcount(s));
  return best;
}

inline std::vector<Mask> maximum_stable_sets(const Graph &g) {
  auto adj = adjacency(g);
  const int a = oracle::alpha(g);
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << g.order()); ++s)
    if (std::popcount(s) == a && stable(adj, s))
      out.push_back(s);
  return out;
}

inline int mu_rec(const std::vector<Mask> &adj, Mask free) {
  if (!free)
    return 0;
  int v = std::countr_zero(free);
  Mask rest = free & ~(Mask{1} << v);
  int best = mu_rec(adj, rest);
  for (Mask nb = adj[v] & rest; nb; nb &= nb - 1)
    best = std::max(best, 1 + mu_rec(adj, rest & ~(nb & -nb)));
  return best;
}

inline int mu(const Graph &g) {
  if (g.order() == 0)
    return 0;
  return mu_rec(adjacency(g), (Mask{1} << g.order()) - 1);
}

// Minimum clique partition by DP over vertex subsets.
inline int theta(const Graph &g) {
  const int n = g.order();
  auto adj = adjacency(g);
  const Mask all = (Mask{1} << n) - 1;
  std::vector<int> best(std::size_t{1} << n, n + 1);
  best[0] = 0;
  for (Mask m = 1; m <= all; ++m) {
    Mask low = m & -m;
    Mask rest = m & ~low;
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      Mask c = sub | low;
      if (clique(adj, c))
        best[m] = std::min(best[m], 1 + best[m & ~c]);
      if (!sub)
        break;
    }
  }
  return best[all];
}

// Floyd-Warshall; unreachable pairs hold -1.
inline std::vector<std::vector<int>> distances(const Graph &g) {
  const int n = g.order();
  const int inf = n + 1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v)
    d[v][v] = 0;
  for (const auto &e : g.edges())
    d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto &row : d)
    for (int &x : row)
      if (x == inf)
        x = -1;
  return d;
}

inline Graph square(const Graph &g) {
  auto d = oracle::distances(g);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (d[i][j] == 1 || d[i][j] == 2)
        edges.emplace_back(i, j);
  return Graph(g.order(), std::span<const std::pair<int, int>>(edges));
}

inline int component_count(const Graph &g) {
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  int count = g.order();
  for (const auto &e : g.edges()) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

// Shortest cycle through edge deletion: girth = min over edges uv of
// 1 + dist(u, v) in G - uv. Zero for forests.
inline int girth(const Graph &g) {
  int best = 0;
  const auto &edges = g.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::vector<std::pair<int, int>> rest;
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (j != k)
        rest.emplace_back(edges[j].u, edges[j].v);
    Graph h(g.order(), std::span<const std::pair<int, int>>(rest));
    int d = oracle::distances(h)[edges[k].u][edges[k].v];
    if (d > 0 && (best == 0 || d + 1 < best))
      best = d + 1;
  }
  return best;
}

} // namespace oracle
