#pragma once

#include <algorithm>

#include "kess/budget.hpp"
#include "kess/detail/bitgraph.hpp"
#include "kess/stable.hpp"

namespace kess {

inline bool is_dominating_in(const Graph &g, const VertexSet &d) {
  std::vector<bool> covered(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : d) {
    covered[v] = true;
    for (Vertex w : g.neighbors(v))
      covered[w] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

/// Domination number: minimum-cardinality dominating set, lexicographically
/// least among the optima.
inline SetResult gamma(const Graph &g, const SolverBudget &budget = {}) {
  using namespace detail;
  BitGraph bg(g);
  BudgetTracker tracker(budget, "gamma");
  const int n = g.order();
  int max_closed = 1;
  for (Vertex v = 0; v < n; ++v)
    max_closed = std::max(max_closed, popcount(bg.closed(v)));

  int best = n + 1;
  Mask best_set = 0;
  auto rec = [&](auto &&self, Vertex i, Mask chosen, int size,
                 Mask covered) -> void {
    tracker.tick();
    Mask open = bg.all & ~covered;
    if (!open) {
      if (size < best) {
        best = size;
        best_set = chosen;
      }
      return;
    }
    int need = (popcount(open) + max_closed - 1) / max_closed;
    if (size + need >= best || i == n)
      return;
    // Some open vertex may have lost every remaining dominator.
    Mask future = bg.all & ~low_mask(i);
    for (Mask w = open; w; w &= w - 1)
      if (!(bg.closed(lowest(w)) & future))
        return;
    self(self, i + 1, chosen | bit(i), size + 1, covered | bg.closed(i));
    self(self, i + 1, chosen, size, covered);
  };
  rec(rec, 0, 0, 0, 0);
  return {best, to_set(best_set)};
}

} // namespace kess
