#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kess/detail/bitgraph.hpp"
#include "kess/harness/facts.hpp"
#include "kess/matching.hpp"

namespace kess::harness {

using Json = nlohmann::ordered_json;

/// How strictly the implicit connectivity convention is applied. Standing
/// mode restricts the connected-graph statements to connected inputs;
/// literal mode drops that filter and checks them on every graph.
enum class HypothesisMode { standing, literal };

enum class Status { not_applicable, holds, violated };

struct CheckResult {
  Status status = Status::not_applicable;
  Json detail;
};

using CheckFn = CheckResult (*)(GraphFacts &, HypothesisMode);

/// One machine-checkable statement about graphs.
struct Statement {
  std::string_view id;
  std::string_view summary;
  CheckFn check;
};

namespace statements {

inline CheckResult skip() { return {}; }

inline CheckResult verdict(bool ok, Json detail) {
  return {ok ? Status::holds : Status::violated, std::move(detail)};
}

// Connectivity requirement shared by every statement stated for connected
// graphs only.
inline bool connected_ok(GraphFacts &f, HypothesisMode mode) {
  return mode == HypothesisMode::literal || f.connected();
}

inline Json set_json(const VertexSet &s) { return Json(s); }

inline bool all_equal(std::span<const bool> xs) {
  return std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) ==
         xs.end();
}

inline CheckResult inequality_chain(GraphFacts &f, HypothesisMode) {
  if (f.order() < 1)
    return skip();
  const int a2 = f.alpha_square(), t2 = f.theta_square(), gm = f.gamma(),
            i = f.ind_dom(), a = f.alpha(), t = f.theta();
  Json d;
  d["values"] = {{"alpha_square", a2}, {"theta_square", t2}, {"gamma", gm},
                 {"ind_dom", i},       {"alpha", a},         {"theta", t}};
  d["conditions"] = {{"alpha_square<=theta_square", a2 <= t2},
                     {"theta_square<=gamma", t2 <= gm},
                     {"gamma<=ind_dom", gm <= i},
                     {"ind_dom<=alpha", i <= a},
                     {"alpha<=theta", a <= t}};
  return verdict(a2 <= t2 && t2 <= gm && gm <= i && i <= a && a <= t,
                 std::move(d));
}

inline CheckResult simplex_equivalences(GraphFacts &f, HypothesisMode mode) {
  if (f.order() < 1 || !connected_ok(f, mode))
    return skip();
  const int a = f.alpha(), a2 = f.alpha_square(), t = f.theta(),
            t2 = f.theta_square(), gm = f.gamma(), i = f.ind_dom();
  const bool c[] = {
      f.one_simplex_per_vertex(),
      a == a2,
      t == t2,
      a2 == t2 && t2 == gm && gm == i && i == a && a == t,
      f.simplicial_graph() && f.well_covered(),
      f.distance3_set_exists(),
  };
  Json d;
  d["values"] = {{"alpha", a}, {"alpha_square", a2}, {"theta", t},
                 {"theta_square", t2}, {"gamma", gm}, {"ind_dom", i}};
  d["conditions"] = {{"one_simplex_per_vertex", c[0]},
                     {"square_stable", c[1]},
                     {"theta_equals_theta_square", c[2]},
                     {"six_invariants_equal", c[3]},
                     {"simplicial_and_well_covered", c[4]},
                     {"distance3_maximum_stable_set", c[5]}};
  return verdict(all_equal(c), std::move(d));
}

inline CheckResult square_core_simplicial(GraphFacts &f, HypothesisMode mode) {
  if (f.order() < 1 || !connected_ok(f, mode) || !f.square_stable())
    return skip();
  using detail::Mask;
  const Graph &g = f.graph();
  Mask in_union = 0;
  Mask in_all = detail::low_mask(f.order());
  for (const VertexSet &s : f.omega_square()) {
    in_union |= detail::to_mask(s);
    in_all &= detail::to_mask(s);
  }
  const Mask simp = detail::to_mask(f.simplicial());
  Mask lone = 0;
  for (Vertex v : f.simplicial())
    if (detail::popcount(detail::to_mask(closed_neighborhood(g, v)) & simp) == 1)
      lone |= detail::bit(v);
  Json bad = Json::array();
  for (Vertex v = 0; v < f.order(); ++v) {
    const Mask b = detail::bit(v);
    bool part1 = ((in_union & b) != 0) == ((simp & b) != 0);
    bool part2 = ((in_all & b) != 0) == ((lone & b) != 0);
    if (!part1 || !part2)
      bad.push_back({{"vertex", v}, {"in_some_square_maximum", (in_union & b) != 0},
                     {"simplicial", (simp & b) != 0},
                     {"in_square_core", (in_all & b) != 0},
                     {"lone_simplicial_in_simplex", (lone & b) != 0}});
  }
  Json d;
  d["simplicial"] = set_json(f.simplicial());
  d["square_core"] = set_json(detail::to_set(in_all));
  d["union_of_square_maxima"] = set_json(detail::to_set(in_union));
  d["violations"] = bad;
  return verdict(bad.empty(), std::move(d));
}

inline CheckResult pendant_matching_square_stable(GraphFacts &f,
                                                  HypothesisMode) {
  if (f.order() < 1 || !f.pendant_pm())
    return skip();
  using detail::Mask;
  const Graph &g = f.graph();
  // K2 components: either end may represent the edge in G^2.
  Mask k2 = 0;
  int k2_count = 0;
  for (const Edge &e : *f.pendant_pm())
    if (g.degree(e.u) == 1 && g.degree(e.v) == 1) {
      k2 |= detail::bit(e.u) | detail::bit(e.v);
      ++k2_count;
    }
  const Mask s0 = detail::to_mask(f.pendant_reps());
  const auto &omega = f.omega_square();
  bool shape_ok = omega.size() == (std::size_t{1} << k2_count);
  for (const VertexSet &s : omega) {
    Mask m = detail::to_mask(s);
    if ((m & ~k2) != (s0 & ~k2))
      shape_ok = false;
    for (const Edge &e : *f.pendant_pm())
      if ((k2 >> e.u) & 1)
        if (detail::popcount(m & (detail::bit(e.u) | detail::bit(e.v))) != 1)
          shape_ok = false;
  }
  Json d;
  d["square_stable"] = f.square_stable();
  d["pendant_set"] = set_json(f.pendant_reps());
  d["square_omega"] = Json(omega);
  d["k2_components"] = k2_count;
  d["omega_matches_pendant_set"] = shape_ok;
  return verdict(f.square_stable() && shape_ok, std::move(d));
}

inline CheckResult ke_square_stable(GraphFacts &f, HypothesisMode mode) {
  if (f.order() < 2 || !connected_ok(f, mode) || !f.ke())
    return skip();
  const bool c[] = {f.square_stable(), f.pendant_pm().has_value(),
                    f.very_well_covered() && f.pendant_count() == f.alpha()};
  Json d;
  d["values"] = {{"alpha", f.alpha()}, {"mu", f.mu()},
                 {"pendant_count", f.pendant_count()}};
  d["conditions"] = {{"square_stable", c[0]},
                     {"pendant_perfect_matching", c[1]},
                     {"very_well_covered_with_alpha_pendants", c[2]}};
  return verdict(all_equal(c), std::move(d));
}

inline CheckResult tree_equivalences(GraphFacts &f, HypothesisMode) {
  if (f.order() < 2 || !f.tree())
    return skip();
  const bool c[] = {f.well_covered(), f.very_well_covered(),
                    f.pendant_pm().has_value(), f.square_stable()};
  Json d;
  d["conditions"] = {{"well_covered", c[0]},
                     {"very_well_covered", c[1]},
                     {"pendant_perfect_matching", c[2]},
                     {"square_stable", c[3]}};
  return verdict(all_equal(c), std::move(d));
}

inline CheckResult alpha_at_most_mu(GraphFacts &f, HypothesisMode mode) {
  if (f.order() < 2 || !connected_ok(f, mode) || !f.square_stable())
    return skip();
  Json d;
  d["values"] = {{"alpha", f.alpha()}, {"mu", f.mu()}};
  return verdict(f.alpha() <= f.mu(), std::move(d));
}

inline CheckResult square_ke_perfect_matching(GraphFacts &f,
                                              HypothesisMode mode) {
  if (f.order() < 2 || !connected_ok(f, mode) || !f.ke_square())
    return skip();
  const bool lhs = f.square_stable();
  const bool rhs = f.ke() && f.perfect_matching();
  Json d;
  d["values"] = {{"alpha", f.alpha()}, {"mu", f.mu()},
                 {"alpha_square", f.alpha_square()},
                 {"mu_square", f.mu_square()}};
  d["conditions"] = {{"square_stable", lhs},
                     {"ke_with_perfect_matching", rhs}};
  return verdict(lhs == rhs, std::move(d));
}

inline CheckResult vwc_ke_pendants(GraphFacts &f, HypothesisMode mode) {
  if (f.order() < 2 || !connected_ok(f, mode))
    return skip();
  const bool lhs = f.square_stable() && f.very_well_covered();
  const bool rhs = f.ke() && f.pendant_count() == f.alpha();
  Json d;
  d["values"] = {{"alpha", f.alpha()}, {"mu", f.mu()},
                 {"alpha_square", f.alpha_square()},
                 {"pendant_count", f.pendant_count()}};
  d["conditions"] = {{"square_stable_and_very_well_covered", lhs},
                     {"ke_with_alpha_pendants", rhs}};
  return verdict(lhs == rhs, std::move(d));
}

inline CheckResult ke_square_dichotomy(GraphFacts &f, HypothesisMode mode) {
  if (f.order() < 1 || !connected_ok(f, mode) || !f.square_stable())
    return skip();
  Json d;
  d["values"] = {{"alpha", f.alpha()}, {"mu", f.mu()},
                 {"alpha_square", f.alpha_square()},
                 {"mu_square", f.mu_square()}};
  d["conditions"] = {{"ke", f.ke()}, {"square_ke", f.ke_square()}};
  return verdict(f.ke() == f.ke_square(), std::move(d));
}

inline CheckResult girth_six_equivalences(GraphFacts &f, HypothesisMode mode) {
  const Graph &g = f.graph();
  if (f.order() < 2 || !connected_ok(f, mode) || !f.girth_value().at_least(6) ||
      is_cycle_of_length(g, 7))
    return skip();
  const bool ke_pendants = f.ke() && f.pendant_count() == f.alpha();
  const bool c[] = {f.well_covered(), f.pendant_pm().has_value(),
                    f.very_well_covered(), ke_pendants && f.core().empty(),
                    f.ke() && f.square_stable()};
  Json d;
  d["values"] = {{"alpha", f.alpha()}, {"mu", f.mu()},
                 {"pendant_count", f.pendant_count()}};
  d["core"] = set_json(f.core());
  d["conditions"] = {{"well_covered", c[0]},
                     {"pendant_perfect_matching", c[1]},
                     {"very_well_covered", c[2]},
                     {"ke_alpha_pendants_empty_core", c[3]},
                     {"ke_square_stable", c[4]}};
  return verdict(all_equal(c), std::move(d));
}

inline CheckResult very_well_covered_ke(GraphFacts &f, HypothesisMode mode) {
  if (f.order() < 2 || !connected_ok(f, mode))
    return skip();
  const bool lhs = f.very_well_covered();
  const bool rhs = f.well_covered() && f.ke();
  Json d;
  d["conditions"] = {{"very_well_covered", lhs},
                     {"well_covered_ke", rhs},
                     {"has_isolated_vertex", f.has_isolated()}};
  return verdict(lhs == rhs, std::move(d));
}

inline CheckResult connected_ke_well_covered(GraphFacts &f, HypothesisMode) {
  if (f.order() < 2 || !f.connected() || !f.ke())
    return skip();
  Json d;
  d["conditions"] = {{"well_covered", f.well_covered()},
                     {"very_well_covered", f.very_well_covered()}};
  return verdict(f.well_covered() == f.very_well_covered(), std::move(d));
}

inline CheckResult closed_neighborhood_deletion(GraphFacts &f,
                                                HypothesisMode) {
  if (f.order() < 2 || f.complete() || !f.well_covered())
    return skip();
  Json bad = Json::array();
  for (Vertex v = 0; v < f.order(); ++v) {
    Graph h = delete_closed_neighborhood(f.graph(), v).graph;
    int ah = h.order() == 0 ? 0 : alpha(h, f.budget()).value;
    bool wc = h.order() == 0 || ind_dom(h, f.budget()).value == ah;
    if (!wc || ah != f.alpha() - 1)
      bad.push_back({{"vertex", v}, {"remainder_well_covered", wc},
                     {"remainder_alpha", ah}});
  }
  Json d;
  d["alpha"] = f.alpha();
  d["violations"] = bad;
  return verdict(bad.empty(), std::move(d));
}

inline CheckResult componentwise_square_stable(GraphFacts &f, HypothesisMode) {
  if (f.order() < 1 || f.connected())
    return skip();
  bool all_parts = true;
  Json parts = Json::array();
  for (const auto &c : components(f.graph())) {
    bool ss = alpha(c.graph, f.budget()).value ==
              alpha(square(c.graph), f.budget()).value;
    all_parts = all_parts && ss;
    parts.push_back({{"vertices", c.to_original}, {"square_stable", ss}});
  }
  Json d;
  d["square_stable"] = f.square_stable();
  d["components"] = parts;
  return verdict(f.square_stable() == all_parts, std::move(d));
}

} // namespace statements

/// Every statement the harness knows, in reporting order.
inline std::span<const Statement> all_statements() {
  using namespace statements;
  static const Statement table[] = {
      {"inequality-chain",
       "alpha(G^2) <= theta(G^2) <= gamma <= i <= alpha <= theta",
       inequality_chain},
      {"simplex-equivalences",
       "one simplex per vertex <=> square-stable <=> theta(G)=theta(G^2) <=> "
       "six invariants equal <=> simplicial and well-covered <=> distance-3 "
       "maximum stable set (connected)",
       simplex_equivalences},
      {"square-core-simplicial",
       "square-stable: v in some maximum stable set of G^2 <=> v simplicial; "
       "v in core(G^2) <=> v the only simplicial vertex of its simplex",
       square_core_simplicial},
      {"pendant-matching-square-stable",
       "pendant perfect matching => square-stable and Omega(G^2) = {pendant "
       "set}",
       pendant_matching_square_stable},
      {"ke-square-stable",
       "KE, n >= 2: square-stable <=> pendant perfect matching <=> very "
       "well-covered with alpha pendant vertices",
       ke_square_stable},
      {"tree-equivalences",
       "trees, n >= 2: well-covered <=> very well-covered <=> pendant perfect "
       "matching <=> square-stable",
       tree_equivalences},
      {"alpha-at-most-mu", "square-stable, n >= 2 => alpha <= mu",
       alpha_at_most_mu},
      {"square-ke-perfect-matching",
       "G^2 KE, n >= 2: square-stable <=> KE with a perfect matching",
       square_ke_perfect_matching},
      {"vwc-ke-pendants",
       "square-stable and very well-covered <=> KE with alpha pendant "
       "vertices",
       vwc_ke_pendants},
      {"ke-square-dichotomy", "square-stable: G KE <=> G^2 KE",
       ke_square_dichotomy},
      {"girth-six-equivalences",
       "girth >= 6, not C7 or K1: well-covered <=> pendant perfect matching "
       "<=> very well-covered <=> KE with alpha pendants and empty core <=> "
       "KE square-stable",
       girth_six_equivalences},
      {"very-well-covered-ke",
       "n >= 2: very well-covered <=> well-covered KE",
       very_well_covered_ke},
      {"connected-ke-well-covered",
       "connected KE, n >= 2: well-covered <=> very well-covered",
       connected_ke_well_covered},
      {"closed-neighborhood-deletion",
       "non-complete well-covered: G - N[v] well-covered with alpha one less",
       closed_neighborhood_deletion},
      {"componentwise-square-stable",
       "disconnected: square-stable <=> every component square-stable",
       componentwise_square_stable},
  };
  return table;
}

inline const Statement *find_statement(std::string_view id) {
  for (const Statement &s : all_statements())
    if (s.id == id)
      return &s;
  return nullptr;
}

// Planted false claims. A working harness must refute each of them.
namespace planted {

using statements::skip;
using statements::verdict;

inline CheckResult well_covered_implies_square_stable(GraphFacts &f,
                                                      HypothesisMode) {
  if (f.order() < 1 || !f.well_covered())
    return skip();
  Json d;
  d["conditions"] = {{"well_covered", true},
                     {"square_stable", f.square_stable()}};
  return verdict(f.square_stable(), std::move(d));
}

inline CheckResult unique_perfect_matching_implies_square_stable(
    GraphFacts &f, HypothesisMode) {
  if (f.order() < 2 || count_perfect_matchings(f.graph()) != 1)
    return skip();
  Json d;
  d["conditions"] = {{"unique_perfect_matching", true},
                     {"square_stable", f.square_stable()}};
  return verdict(f.square_stable(), std::move(d));
}

inline CheckResult unique_square_maximum_implies_square_stable(
    GraphFacts &f, HypothesisMode) {
  if (f.order() < 1 || f.omega_square().size() != 1)
    return skip();
  Json d;
  d["square_omega"] = Json(f.omega_square());
  d["values"] = {{"alpha", f.alpha()}, {"alpha_square", f.alpha_square()}};
  return verdict(f.square_stable(), std::move(d));
}

} // namespace planted

struct Control {
  Statement claim;
  int max_order;
};

inline std::span<const Control> negative_controls() {
  using namespace planted;
  static const Control table[] = {
      {{"control:well-covered-implies-square-stable",
        "planted: well-covered => square-stable",
        well_covered_implies_square_stable},
       4},
      {{"control:unique-perfect-matching-implies-square-stable",
        "planted: unique perfect matching => square-stable",
        unique_perfect_matching_implies_square_stable},
       6},
      {{"control:unique-square-maximum-implies-square-stable",
        "planted: |Omega(G^2)| = 1 => square-stable",
        unique_square_maximum_implies_square_stable},
       6},
  };
  return table;
}

} // namespace kess::harness
