#pragma once

#include <functional>
#include <vector>

#include "kess/budget.hpp"
#include "kess/detail/bitgraph.hpp"
#include "kess/graph.hpp"

namespace kess {

/// An optimal value with one certifying vertex set.
struct SetResult {
  int value = 0;
  VertexSet witness;
};

namespace detail {

// Greedy partition of `candidates` into cliques. The count bounds the size of
// any stable subset of `candidates` from above.
inline int clique_cover_bound(const BitGraph &bg, Mask candidates) {
  int cliques = 0;
  while (candidates) {
    Vertex u = lowest(candidates);
    Mask clique = bit(u);
    Mask open = candidates & bg.nbr[u];
    while (open) {
      Vertex w = lowest(open);
      clique |= bit(w);
      open &= bg.nbr[w];
    }
    candidates &= ~clique;
    ++cliques;
  }
  return cliques;
}

// Include-first DFS that always branches on the lowest candidate. Visits
// stable sets of equal size in lexicographic order, so the first optimum
// found is the lexicographically least one.
class MaxStableSearch {
public:
  MaxStableSearch(const BitGraph &bg, BudgetTracker &tracker)
      : bg_(bg), tracker_(tracker) {}

  SetResult run() {
    best_ = -1;
    best_set_ = 0;
    search(bg_.all, 0, 0);
    return {best_, to_set(best_set_)};
  }

private:
  void search(Mask candidates, Mask chosen, int size) {
    tracker_.tick();
    if (!candidates) {
      if (size > best_) {
        best_ = size;
        best_set_ = chosen;
      }
      return;
    }
    if (size + popcount(candidates) <= best_)
      return;
    if (size + clique_cover_bound(bg_, candidates) <= best_)
      return;
    Vertex v = lowest(candidates);
    search(candidates & ~bg_.closed(v), chosen | bit(v), size + 1);
    search(candidates & ~bit(v), chosen, size);
  }

  const BitGraph &bg_;
  BudgetTracker &tracker_;
  int best_ = -1;
  Mask best_set_ = 0;
};

// Lists stable sets of exactly `target` vertices in lexicographic order
// until `emit` returns false.
inline void enumerate_stable_of_size(const BitGraph &bg, int target,
                                     BudgetTracker &tracker,
                                     const std::function<bool(Mask)> &emit) {
  auto rec = [&](auto &&self, Mask candidates, Mask chosen, int size) -> bool {
    tracker.tick();
    if (size == target)
      return emit(chosen);
    if (size + popcount(candidates) < target ||
        size + clique_cover_bound(bg, candidates) < target)
      return true;
    Vertex v = lowest(candidates);
    return self(self, candidates & ~bg.closed(v), chosen | bit(v), size + 1) &&
           self(self, candidates & ~bit(v), chosen, size);
  };
  rec(rec, bg.all, 0, 0);
}

// Include-first scan over vertex ids that emits inclusion-maximal stable sets
// in lexicographic order. `visit` returns false to prune a partial set; it
// receives the current chosen mask and its size.
template <typename Visit, typename Emit>
void scan_maximal_stable(const BitGraph &bg, BudgetTracker *tracker,
                         Visit &&visit, Emit &&emit) {
  const int n = bg.n;
  // chosen: the partial set; blocked: N(chosen); waiting: vertices left out
  // that still need a neighbor in chosen.
  auto rec = [&](auto &&self, Vertex i, Mask chosen, int size, Mask blocked,
                 Mask waiting) -> void {
    if (tracker)
      tracker->tick();
    if (!visit(chosen, size))
      return;
    // A waiting vertex with no available neighbor from i on can never be
    // covered.
    Mask future = bg.all & ~low_mask(i) & ~blocked;
    for (Mask w = waiting; w; w &= w - 1)
      if (!(bg.nbr[lowest(w)] & future))
        return;
    while (i < n && (blocked & bit(i)))
      ++i;
    if (i == n) {
      if (!waiting)
        emit(chosen, size);
      return;
    }
    self(self, i + 1, chosen | bit(i), size + 1, blocked | bg.nbr[i],
         waiting & ~bg.nbr[i]);
    self(self, i + 1, chosen, size, blocked, waiting | bit(i));
  };
  rec(rec, 0, 0, 0, 0, 0);
}

} // namespace detail

/// Stability number with the lexicographically least maximum stable set.
inline SetResult alpha(const Graph &g, const SolverBudget &budget = {}) {
  detail::BitGraph bg(g);
  BudgetTracker tracker(budget, "alpha");
  return detail::MaxStableSearch(bg, tracker).run();
}

/// Streams every inclusion-maximal stable set exactly once, in lexicographic
/// order of the sorted vertex lists.
inline void for_each_maximal_stable_set(
    const Graph &g, const std::function<void(const VertexSet &)> &sink) {
  detail::BitGraph bg(g);
  detail::scan_maximal_stable(
      bg, nullptr, [](detail::Mask, int) { return true; },
      [&](detail::Mask chosen, int) { sink(detail::to_set(chosen)); });
}

inline std::vector<VertexSet> enumerate_maximal_stable_sets(const Graph &g) {
  std::vector<VertexSet> out;
  for_each_maximal_stable_set(g,
                              [&](const VertexSet &s) { out.push_back(s); });
  return out;
}

/// Independent domination number i(G): the smallest maximal stable set.
inline SetResult ind_dom(const Graph &g, const SolverBudget &budget = {}) {
  detail::BitGraph bg(g);
  BudgetTracker tracker(budget, "ind_dom");
  int best = g.order() + 1;
  detail::Mask best_set = 0;
  detail::scan_maximal_stable(
      bg, &tracker, [&](detail::Mask, int size) { return size < best; },
      [&](detail::Mask chosen, int size) {
        if (size < best) {
          best = size;
          best_set = chosen;
        }
      });
  return {best, detail::to_set(best_set)};
}

/// Omega(G): all maximum stable sets, lexicographically ordered.
inline std::vector<VertexSet> omega_family(const Graph &g,
                                           const SolverBudget &budget = {}) {
  detail::BitGraph bg(g);
  BudgetTracker tracker(budget, "omega_family");
  int target = detail::MaxStableSearch(bg, tracker).run().value;
  std::vector<VertexSet> out;
  detail::enumerate_stable_of_size(bg, target, tracker, [&](detail::Mask m) {
    out.push_back(detail::to_set(m));
    return true;
  });
  return out;
}

struct CoreOptions {
  /// Graphs up to this order intersect the materialized Omega family;
  /// larger ones test each vertex by deletion.
  int materialize_cap = 16;
};

/// core(G): the vertices common to all maximum stable sets.
///
/// Above the cap, v is in the core iff alpha(G - v) < alpha(G).
inline VertexSet core_set(const Graph &g, const SolverBudget &budget = {},
                          const CoreOptions &options = {}) {
  if (g.order() <= options.materialize_cap) {
    detail::Mask common = detail::low_mask(g.order());
    for (const VertexSet &s : omega_family(g, budget))
      common &= detail::to_mask(s);
    return detail::to_set(common);
  }
  const int a = alpha(g, budget).value;
  VertexSet core;
  for (Vertex v = 0; v < g.order(); ++v)
    if (alpha(delete_vertex(g, v).graph, budget).value < a)
      core.push_back(v);
  return core;
}

} // namespace kess
