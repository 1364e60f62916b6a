#pragma once

#include <algorithm>
#include <vector>

#include "kess/budget.hpp"
#include "kess/detail/bitgraph.hpp"
#include "kess/stable.hpp"

namespace kess {

/// Partition of the vertex set into cliques, each sorted, ordered by their
/// smallest member.
using CliquePartition = std::vector<VertexSet>;

struct CliqueCoverResult {
  int value = 0;
  CliquePartition witness;
};

inline bool is_clique_partition_of(const Graph &g, const CliquePartition &p) {
  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  for (const VertexSet &c : p) {
    if (c.empty() || !is_clique_in(g, c))
      return false;
    for (Vertex v : c) {
      if (!g.contains(v))
        return false;
      ++hits[v];
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

/// Clique cover number theta(G), i.e. the chromatic number of the complement.
///
/// Vertices are placed in ascending id, each into an existing compatible
/// clique (in creation order) or a new one. The first optimum reached is the
/// least partition in that order. alpha(G) is a lower bound and ends the
/// search once met.
inline CliqueCoverResult theta(const Graph &g, const SolverBudget &budget = {}) {
  using namespace detail;
  BitGraph bg(g);
  const int n = g.order();
  if (n == 0)
    return {};
  const int lower = alpha(g, budget).value;
  BudgetTracker tracker(budget, "theta");

  std::vector<Mask> classes(static_cast<std::size_t>(n), 0);
  std::vector<Mask> best_classes;
  int best = n + 1;
  bool done = false;
  auto rec = [&](auto &&self, Vertex v, int used) -> void {
    tracker.tick();
    if (v == n) {
      if (used < best) {
        best = used;
        best_classes.assign(classes.begin(), classes.begin() + used);
        done = best == lower;
      }
      return;
    }
    for (int c = 0; c < used && !done; ++c) {
      if ((classes[c] & bg.nbr[v]) != classes[c])
        continue;
      classes[c] |= bit(v);
      self(self, v + 1, used);
      classes[c] &= ~bit(v);
    }
    if (!done && used + 1 < best) {
      classes[used] = bit(v);
      self(self, v + 1, used + 1);
      classes[used] = 0;
    }
  };
  rec(rec, 0, 0);

  CliqueCoverResult r;
  r.value = best;
  for (Mask m : best_classes)
    r.witness.push_back(to_set(m));
  return r;
}

/// Every inclusion-maximal clique exactly once, sorted lexicographically.
inline std::vector<VertexSet> maximal_cliques(const Graph &g,
                                              const SolverBudget &budget = {}) {
  using namespace detail;
  BitGraph bg(g);
  BudgetTracker tracker(budget, "maximal_cliques");
  std::vector<VertexSet> out;
  // Bron-Kerbosch with Tomita pivoting.
  auto rec = [&](auto &&self, Mask r, Mask p, Mask x) -> void {
    tracker.tick();
    if (!p && !x) {
      out.push_back(to_set(r));
      return;
    }
    Vertex pivot = lowest(p | x);
    int most = -1;
    for (Mask u = p | x; u; u &= u - 1) {
      int c = popcount(p & bg.nbr[lowest(u)]);
      if (c > most) {
        most = c;
        pivot = lowest(u);
      }
    }
    for (Mask cand = p & ~bg.nbr[pivot]; cand; cand &= cand - 1) {
      Vertex v = lowest(cand);
      self(self, r | bit(v), p & bg.nbr[v], x & bg.nbr[v]);
      p &= ~bit(v);
      x |= bit(v);
    }
  };
  if (g.order() > 0)
    rec(rec, 0, bg.all, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_simplicial_vertex(const Graph &g, Vertex v) {
  auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!g.adjacent(nb[i], nb[j]))
        return false;
  return true;
}

/// simp(G): vertices whose open neighborhood is a clique.
inline VertexSet simplicial_vertices(const Graph &g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_simplicial_vertex(g, v))
      out.push_back(v);
  return out;
}

/// Maximal cliques that contain a simplicial vertex, sorted.
///
/// A simplicial vertex v lies in exactly one maximal clique, namely N[v], so
/// the simplexes are the distinct closed neighborhoods of simplicial
/// vertices. This works at any order.
inline std::vector<VertexSet> simplexes(const Graph &g) {
  std::vector<VertexSet> out;
  for (Vertex v : simplicial_vertices(g))
    out.push_back(closed_neighborhood(g, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace kess
