#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "kess/clique.hpp"
#include "kess/domination.hpp"
#include "kess/generators.hpp"
#include "kess/invariants.hpp"
#include "oracles.hpp"

using namespace kess;

namespace {

struct Totals {
  long alpha = 0, theta = 0, gamma = 0, ind_dom = 0, ke = 0, well_covered = 0;
};

// Sums over every labeled graph of each order, computed once by a separate
// brute-force script and frozen here.
constexpr Totals kFrozen[] = {
    {},
    {1, 1, 1, 1, 1, 1},
    {3, 3, 3, 3, 2, 2},
    {16, 16, 13, 13, 7, 5},
    {151, 151, 113, 113, 59, 30},
    {2750, 2762, 1945, 1945, 626, 349},
    {97829, 98513, 65103, 65743, 24172, 6945},
};

} // namespace

TEST(Invariants, OracleAgreementOnAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    Totals t;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << detail::pair_count(n));
         ++code) {
      Graph g = labeled_graph(n, code);
      auto r = compute_invariants(g);
      ASSERT_TRUE(certifies(g, r)) << n << ":" << code;
      if (n <= 5 || code % 4 == 0) {
        ASSERT_EQ(r.alpha.value, oracle::alpha(g)) << n << ":" << code;
        ASSERT_EQ(r.theta.value, oracle::theta(g)) << n << ":" << code;
        ASSERT_EQ(r.gamma.value, oracle::gamma(g)) << n << ":" << code;
        ASSERT_EQ(r.ind_dom.value, oracle::ind_dom(g)) << n << ":" << code;
      }
      t.alpha += r.alpha.value;
      t.theta += r.theta.value;
      t.gamma += r.gamma.value;
      t.ind_dom += r.ind_dom.value;
      t.ke += r.alpha.value + r.mu.value == n;
      t.well_covered += r.alpha.value == r.ind_dom.value;
    }
    EXPECT_EQ(t.alpha, kFrozen[n].alpha) << n;
    EXPECT_EQ(t.theta, kFrozen[n].theta) << n;
    EXPECT_EQ(t.gamma, kFrozen[n].gamma) << n;
    EXPECT_EQ(t.ind_dom, kFrozen[n].ind_dom) << n;
    EXPECT_EQ(t.ke, kFrozen[n].ke) << n;
    EXPECT_EQ(t.well_covered, kFrozen[n].well_covered) << n;
  }
}

TEST(Invariants, OracleAgreementOnRandomEightVertexGraphs) {
  detail::Rng rng(8);
  for (int k = 0; k < 300; ++k) {
    Graph g = random_gnp_graph(7 + k % 2, 0.2 + 0.6 * rng.unit(), rng);
    auto r = compute_invariants(g);
    ASSERT_EQ(r.alpha.value, oracle::alpha(g));
    ASSERT_EQ(r.mu.value, oracle::mu(g));
    ASSERT_EQ(r.theta.value, oracle::theta(g));
    ASSERT_EQ(r.gamma.value, oracle::gamma(g));
    ASSERT_EQ(r.ind_dom.value, oracle::ind_dom(g));
  }
}

TEST(Invariants, ChainHoldsOnNamedGraphs) {
  for (const Graph &g : {named::cycle(5), named::path(7), named::complete(5),
                         fixtures::ke_seven(), fixtures::eleven_square_stable()}) {
    auto r = compute_invariants(g);
    EXPECT_LE(r.gamma.value, r.ind_dom.value);
    EXPECT_LE(r.ind_dom.value, r.alpha.value);
    EXPECT_LE(r.alpha.value, r.theta.value);
  }
}

TEST(Invariants, WitnessesAreLexLeast) {
  EXPECT_EQ(alpha(named::path(4)).witness, (VertexSet{0, 2}));
  EXPECT_EQ(alpha(named::cycle(6)).witness, (VertexSet{0, 2, 4}));
  EXPECT_EQ(gamma(named::path(3)).witness, (VertexSet{1}));
  EXPECT_EQ(ind_dom(named::star(4)).witness, (VertexSet{0}));
}

TEST(Invariants, ThetaOfNamedGraphs) {
  EXPECT_EQ(theta(named::cycle(5)).value, 3);
  EXPECT_EQ(theta(named::complete(6)).value, 1);
  EXPECT_EQ(theta(named::empty(4)).value, 4);
  EXPECT_EQ(theta(named::empty(0)).value, 0);
  auto c = theta(named::path(4));
  EXPECT_EQ(c.value, 2);
  EXPECT_TRUE(is_clique_partition_of(named::path(4), c.witness));
}

TEST(Invariants, MaximalStableEnumeration) {
  for (std::uint64_t code = 0; code < (1u << 10); code += 11) {
    Graph g = labeled_graph(5, code);
    auto adj = oracle::adjacency(g);
    std::vector<VertexSet> want;
    for (oracle::Mask s = 0; s < 32; ++s)
      if (oracle::maximal_stable(adj, s, 31)) {
        VertexSet set;
        for (int v = 0; v < 5; ++v)
          if (s >> v & 1)
            set.push_back(v);
        want.push_back(set);
      }
    std::sort(want.begin(), want.end());
    EXPECT_EQ(enumerate_maximal_stable_sets(g), want) << code;
  }
}

TEST(Invariants, OmegaFamilyOfCompleteGraphs) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(omega_family(named::complete(n)).size(), static_cast<std::size_t>(n));
    EXPECT_EQ(omega_family(square(named::complete(n))).size(),
              static_cast<std::size_t>(n));
  }
}

TEST(Invariants, CoreBothRoutesAgree) {
  detail::Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    Graph g = random_gnp_graph(3 + k % 8, 0.3, rng);
    EXPECT_EQ(core_set(g), core_set(g, {}, CoreOptions{0}));
  }
  EXPECT_EQ(core_set(named::path(5)), (VertexSet{0, 2, 4}));
  EXPECT_TRUE(core_set(named::cycle(4)).empty());
}

TEST(Invariants, SimplexesAreSimplicialMaximalCliques) {
  detail::Rng rng(6);
  for (int k = 0; k < 300; ++k) {
    Graph g = random_gnp_graph(1 + k % 9, 0.4, rng);
    std::vector<VertexSet> want;
    for (const VertexSet &c : maximal_cliques(g))
      if (std::any_of(c.begin(), c.end(),
                      [&](Vertex v) { return is_simplicial_vertex(g, v); }))
        want.push_back(c);
    EXPECT_EQ(simplexes(g), want);
  }
}

TEST(Invariants, EightVertexSimplicialCore) {
  Graph g = fixtures::eight_vertex_simplicial_core();
  EXPECT_EQ(simplicial_vertices(g), (VertexSet{1, 3, 4, 7}));
  EXPECT_EQ(square(g).size(), 16u);
  EXPECT_EQ(core_set(square(g)), (VertexSet{1, 4}));
}

TEST(Invariants, BudgetExhaustionThrows) {
  detail::Rng rng(3);
  Graph g = random_gnp_graph(60, 0.1, rng);
  SolverBudget tiny{100, 60};
  EXPECT_THROW(alpha(g, tiny), BudgetExhausted);
  EXPECT_THROW(theta(g, tiny), BudgetExhausted);
  EXPECT_THROW(gamma(g, tiny), BudgetExhausted);
  EXPECT_THROW(alpha(g, SolverBudget{0, 1}), std::invalid_argument);
}

TEST(Invariants, OrderAboveWordSizeIsRejected) {
  EXPECT_THROW(alpha(named::path(65)), std::domain_error);
  EXPECT_EQ(mu(named::path(65)).value, 32);
}
