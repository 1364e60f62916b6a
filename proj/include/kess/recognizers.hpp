#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "kess/budget.hpp"
#include "kess/clique.hpp"
#include "kess/graph.hpp"
#include "kess/matching.hpp"
#include "kess/stable.hpp"

namespace kess {

namespace detail {

inline void require_vertices(const Graph &g, const char *what) {
  if (g.order() < 1)
    throw std::invalid_argument(std::string(what) +
                                " is undefined for the graph on 0 vertices");
}

} // namespace detail

/// alpha(G) + mu(G) = |V(G)|.
inline bool is_koenig_egervary(const Graph &g, const SolverBudget &budget = {}) {
  detail::require_vertices(g, "is_koenig_egervary");
  return alpha(g, budget).value + mu(g).value == g.order();
}

struct WellCoveredResult {
  bool value = false;
  /// A maximal stable set smaller than alpha when value is false, otherwise
  /// a smallest maximal stable set (of size alpha).
  VertexSet certificate;
  int alpha = 0;
};

/// Well-covered iff the smallest maximal stable set already has size alpha.
inline WellCoveredResult is_well_covered(const Graph &g,
                                         const SolverBudget &budget = {}) {
  detail::require_vertices(g, "is_well_covered");
  auto a = alpha(g, budget);
  auto i = ind_dom(g, budget);
  return {i.value == a.value, i.witness, a.value};
}

/// Well-covered, no isolated vertices, and |V| = 2 alpha.
inline bool is_very_well_covered(const Graph &g,
                                 const SolverBudget &budget = {}) {
  detail::require_vertices(g, "is_very_well_covered");
  if (!isolated_vertices(g).empty())
    return false;
  auto wc = is_well_covered(g, budget);
  return wc.value && g.order() == 2 * wc.alpha;
}

/// alpha(G) = alpha(G^2).
inline bool is_square_stable(const Graph &g, const SolverBudget &budget = {}) {
  detail::require_vertices(g, "is_square_stable");
  return alpha(g, budget).value == alpha(square(g), budget).value;
}

/// Searches Omega(G) for a set whose members are pairwise at distance >= 3
/// in G. Works from the distance matrix alone, without building G^2; returns
/// the lexicographically least such set.
inline std::optional<VertexSet>
has_distance3_maximum_stable_set(const Graph &g,
                                 const SolverBudget &budget = {}) {
  detail::require_vertices(g, "has_distance3_maximum_stable_set");
  using namespace detail;
  const DistanceMatrix dist = distances(g);
  BitGraph bg(g);
  BudgetTracker tracker(budget, "distance3_search");
  const int target = MaxStableSearch(bg, tracker).run().value;
  std::optional<VertexSet> found;
  enumerate_stable_of_size(bg, target, tracker, [&](Mask m) {
    VertexSet s = to_set(m);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (dist.within(s[i], s[j], 2))
          return true;
    found = std::move(s);
    return false;
  });
  return found;
}

/// Pendant vertices with each K2 component represented by its lower end
/// only. This is the stable set S0 of a pendant perfect matching, and its
/// size is the pendant count used by the pendant-count characterizations.
inline VertexSet pendant_representatives(const Graph &g) {
  VertexSet out;
  for (Vertex v : pendant_vertices(g)) {
    Vertex w = g.neighbors(v)[0];
    if (g.degree(w) == 1 && w < v)
      continue;
    out.push_back(v);
  }
  return out;
}

/// Linear-time test for a perfect matching made of pendant edges.
///
/// Each pendant vertex is paired with its only neighbor; a K2 component
/// contributes its edge once. Succeeds iff those edges are disjoint and
/// cover every vertex.
inline std::optional<Matching> has_pendant_perfect_matching(const Graph &g) {
  detail::require_vertices(g, "has_pendant_perfect_matching");
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  Matching m;
  for (Vertex v : pendant_representatives(g)) {
    Vertex w = g.neighbors(v)[0];
    if (owner[v] != -1 || owner[w] != -1)
      return std::nullopt;
    owner[v] = owner[w] = static_cast<int>(m.size());
    m.emplace_back(v, w);
  }
  if (2 * m.size() != static_cast<std::size_t>(g.order()))
    return std::nullopt;
  std::sort(m.begin(), m.end());
  return m;
}

/// Every vertex is simplicial or adjacent to a simplicial vertex.
inline bool is_simplicial_graph(const Graph &g) {
  detail::require_vertices(g, "is_simplicial_graph");
  std::vector<bool> ok(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : simplicial_vertices(g)) {
    ok[v] = true;
    for (Vertex w : g.neighbors(v))
      ok[w] = true;
  }
  return std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
}

inline bool vertex_in_exactly_one_simplex(const Graph &g) {
  detail::require_vertices(g, "vertex_in_exactly_one_simplex");
  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  for (const VertexSet &s : simplexes(g))
    for (Vertex v : s)
      ++hits[v];
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

/// A flag that is unknown when its solver ran out of budget.
using Flag = std::optional<bool>;

struct RecognitionProfile {
  Flag is_ke;
  Flag is_well_covered;
  Flag is_very_well_covered;
  Flag is_square_stable;
  Flag is_simplicial_graph;
  Flag has_pendant_pm;
  Flag one_simplex_per_vertex;

  std::optional<int> alpha;
  std::optional<int> alpha_square;
  std::optional<int> mu;

  /// Pendant perfect matching, when one exists.
  std::optional<Matching> pendant_pm;
  /// Maximum stable set with pairwise distances >= 3 (square-stable).
  std::optional<VertexSet> distance3_set;
  /// Smallest maximal stable set; smaller than alpha iff not well-covered.
  std::optional<VertexSet> smallest_maximal_stable;
  /// Maximum stable set paired with mu's matching (KE certificate).
  std::optional<VertexSet> maximum_stable;
  std::optional<Matching> maximum_matching;
  VertexSet simplicial;

  std::vector<std::string> exhausted;
};

struct RecognizeOptions {
  /// Also evaluate flags that a cheap certificate already settled, and
  /// throw std::logic_error when the two routes disagree.
  bool cross_check = false;
};

/// Evaluates every class flag. Budget exhaustion leaves the affected flags
/// empty and names them in `exhausted`.
inline RecognitionProfile recognize(const Graph &g,
                                    const SolverBudget &budget = {},
                                    const RecognizeOptions &options = {}) {
  detail::require_vertices(g, "recognize");
  RecognitionProfile p;
  p.pendant_pm = has_pendant_perfect_matching(g);
  p.has_pendant_pm = p.pendant_pm.has_value();
  p.simplicial = simplicial_vertices(g);
  p.is_simplicial_graph = is_simplicial_graph(g);
  p.one_simplex_per_vertex = vertex_in_exactly_one_simplex(g);

  auto m = mu(g);
  p.mu = m.value;
  p.maximum_matching = m.witness;

  auto guarded = [&](const char *name, auto &&fn) {
    try {
      fn();
    } catch (const BudgetExhausted &) {
      p.exhausted.emplace_back(name);
    }
  };

  guarded("alpha", [&] {
    auto a = alpha(g, budget);
    p.alpha = a.value;
    p.maximum_stable = a.witness;
    p.is_ke = a.value + m.value == g.order();
  });

  guarded("well_covered", [&] {
    if (!p.alpha)
      return;
    auto i = ind_dom(g, budget);
    p.smallest_maximal_stable = i.witness;
    p.is_well_covered = i.value == *p.alpha;
    p.is_very_well_covered = *p.is_well_covered &&
                             isolated_vertices(g).empty() &&
                             g.order() == 2 * *p.alpha;
  });

  guarded("square_stable", [&] {
    if (!p.alpha)
      return;
    if (p.pendant_pm && !options.cross_check) {
      // A pendant perfect matching makes the pendant ends a maximum stable
      // set of G^2.
      p.is_square_stable = true;
      p.alpha_square = *p.alpha;
      p.distance3_set = pendant_representatives(g);
      return;
    }
    auto sq = alpha(square(g), budget);
    p.alpha_square = sq.value;
    p.is_square_stable = sq.value == *p.alpha;
    if (*p.is_square_stable)
      p.distance3_set = sq.witness;
    if (options.cross_check) {
      auto d3 = has_distance3_maximum_stable_set(g, budget);
      if (d3.has_value() != *p.is_square_stable)
        throw std::logic_error("distance-3 search disagrees with alpha(G^2)");
      if (p.pendant_pm && !*p.is_square_stable)
        throw std::logic_error("pendant perfect matching without square "
                               "stability");
    }
  });
  return p;
}

} // namespace kess
