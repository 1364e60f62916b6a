#pragma once

#include <optional>
#include <vector>

#include "kess/budget.hpp"
#include "kess/clique.hpp"
#include "kess/domination.hpp"
#include "kess/graph.hpp"
#include "kess/matching.hpp"
#include "kess/recognizers.hpp"
#include "kess/stable.hpp"

namespace kess::harness {

/// Per-graph cache of everything the checkers ask about. Each value is
/// computed on first use; BudgetExhausted propagates to the caller.
/// Not thread-safe: one instance per graph per worker.
class GraphFacts {
public:
  GraphFacts(Graph g, SolverBudget budget)
      : g_(std::move(g)), budget_(budget) {}

  const Graph &graph() const { return g_; }
  int order() const { return g_.order(); }

  const Graph &square_graph() { return memo(sq_, [&] { return square(g_); }); }

  bool connected() {
    return memo(connected_, [&] { return is_connected(g_); });
  }
  bool complete() const { return is_complete(g_); }
  bool tree() { return connected() && g_.size() + 1 == std::size_t(order()); }
  const Girth &girth_value() { return memo(girth_, [&] { return girth(g_); }); }

  int alpha() { return memo(alpha_, [&] { return kess::alpha(g_, budget_).value; }); }
  int alpha_square() {
    return memo(alpha_sq_,
                [&] { return kess::alpha(square_graph(), budget_).value; });
  }
  int mu() { return memo(mu_, [&] { return kess::mu(g_).value; }); }
  int mu_square() {
    return memo(mu_sq_, [&] { return kess::mu(square_graph()).value; });
  }
  int theta() {
    return memo(theta_, [&] { return kess::theta(g_, budget_).value; });
  }
  int theta_square() {
    return memo(theta_sq_,
                [&] { return kess::theta(square_graph(), budget_).value; });
  }
  int gamma() {
    return memo(gamma_, [&] { return kess::gamma(g_, budget_).value; });
  }
  int ind_dom() {
    return memo(ind_dom_, [&] { return kess::ind_dom(g_, budget_).value; });
  }

  bool ke() { return alpha() + mu() == order(); }
  bool ke_square() { return alpha_square() + mu_square() == order(); }
  bool square_stable() { return alpha() == alpha_square(); }
  bool well_covered() { return ind_dom() == alpha(); }
  bool has_isolated() { return !isolated_vertices(g_).empty(); }
  bool very_well_covered() {
    return !has_isolated() && well_covered() && order() == 2 * alpha();
  }
  bool perfect_matching() { return 2 * mu() == order(); }

  const std::optional<Matching> &pendant_pm() {
    return memo(pendant_pm_, [&] { return has_pendant_perfect_matching(g_); });
  }
  const VertexSet &pendant_reps() {
    return memo(pendant_reps_, [&] { return pendant_representatives(g_); });
  }
  int pendant_count() { return static_cast<int>(pendant_reps().size()); }

  const VertexSet &simplicial() {
    return memo(simp_, [&] { return simplicial_vertices(g_); });
  }
  bool simplicial_graph() {
    return memo(simp_graph_, [&] { return is_simplicial_graph(g_); });
  }
  bool one_simplex_per_vertex() {
    return memo(one_simplex_, [&] { return vertex_in_exactly_one_simplex(g_); });
  }
  bool distance3_set_exists() {
    return memo(distance3_, [&] {
      return has_distance3_maximum_stable_set(g_, budget_).has_value();
    });
  }

  const std::vector<VertexSet> &omega_square() {
    return memo(omega_sq_,
                [&] { return omega_family(square_graph(), budget_); });
  }
  const VertexSet &core() {
    return memo(core_, [&] { return core_set(g_, budget_); });
  }

  const SolverBudget &budget() const { return budget_; }

private:
  template <typename T, typename F> const T &memo(std::optional<T> &slot, F &&f) {
    if (!slot)
      slot.emplace(f());
    return *slot;
  }

  Graph g_;
  SolverBudget budget_;
  std::optional<Graph> sq_;
  std::optional<bool> connected_;
  std::optional<Girth> girth_;
  std::optional<int> alpha_, alpha_sq_, mu_, mu_sq_, theta_, theta_sq_, gamma_,
      ind_dom_;
  std::optional<std::optional<Matching>> pendant_pm_;
  std::optional<VertexSet> pendant_reps_, simp_, core_;
  std::optional<bool> simp_graph_, one_simplex_, distance3_;
  std::optional<std::vector<VertexSet>> omega_sq_;
};

} // namespace kess::harness
