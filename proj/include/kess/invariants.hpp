#pragma once

#include "kess/budget.hpp"
#include "kess/clique.hpp"
#include "kess/domination.hpp"
#include "kess/graph.hpp"
#include "kess/matching.hpp"
#include "kess/stable.hpp"

namespace kess {

/// Exact invariant values of one graph, each with a certificate.
struct InvariantReport {
  int order = 0;
  SetResult alpha;
  MatchingResult mu;
  CliqueCoverResult theta;
  SetResult gamma;
  SetResult ind_dom;
  Girth girth = Girth::acyclic();
};

inline InvariantReport compute_invariants(const Graph &g,
                                          const SolverBudget &budget = {}) {
  InvariantReport r;
  r.order = g.order();
  r.alpha = alpha(g, budget);
  r.mu = mu(g);
  r.theta = theta(g, budget);
  r.gamma = gamma(g, budget);
  r.ind_dom = ind_dom(g, budget);
  r.girth = girth(g);
  return r;
}

inline bool is_maximal_stable_in(const Graph &g, const VertexSet &s) {
  if (!is_stable_in(g, s))
    return false;
  std::vector<bool> covered(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : s) {
    covered[v] = true;
    for (Vertex w : g.neighbors(v))
      covered[w] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

/// Re-validates every witness against its claimed value.
inline bool certifies(const Graph &g, const InvariantReport &r) {
  auto sized = [](const auto &w, int v) {
    return static_cast<int>(w.size()) == v;
  };
  return sized(r.alpha.witness, r.alpha.value) &&
         is_stable_in(g, r.alpha.witness) &&
         sized(r.mu.witness, r.mu.value) && is_matching_in(g, r.mu.witness) &&
         sized(r.theta.witness, r.theta.value) &&
         is_clique_partition_of(g, r.theta.witness) &&
         sized(r.gamma.witness, r.gamma.value) &&
         is_dominating_in(g, r.gamma.witness) &&
         sized(r.ind_dom.witness, r.ind_dom.value) &&
         is_maximal_stable_in(g, r.ind_dom.witness);
}

} // namespace kess
