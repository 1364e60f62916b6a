#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "kess/harness/runner.hpp"
#include "kess/io/report.hpp"

using namespace kess;
using namespace kess::harness;

namespace {

const Statement &statement(std::string_view id) {
  const Statement *s = find_statement(id);
  if (!s)
    throw std::logic_error("no statement " + std::string(id));
  return *s;
}

Status check(std::string_view id, const Graph &g,
             HypothesisMode mode = HypothesisMode::standing) {
  GraphFacts facts(g, {});
  return statement(id).check(facts, mode).status;
}

} // namespace

TEST(Harness, StatementIdsAreUnique) {
  std::set<std::string_view> ids;
  for (const Statement &s : all_statements())
    EXPECT_TRUE(ids.insert(s.id).second) << s.id;
  EXPECT_EQ(ids.size(), 15u);
  EXPECT_EQ(find_statement("nope"), nullptr);
}

TEST(Harness, NegativeControlsAreRefuted) {
  auto outcomes = run_negative_controls();
  ASSERT_EQ(outcomes.size(), 3u);
  for (const auto &o : outcomes) {
    EXPECT_TRUE(o.refuted()) << o.verdict.statement;
    EXPECT_TRUE(o.verdict.complete());
  }
  Graph a = decode_graph6(outcomes[0].verdict.counterexample->graph6);
  EXPECT_TRUE(is_cycle_of_length(a, 4));
  EXPECT_LE(decode_graph6(outcomes[2].verdict.counterexample->graph6).order(), 6);
}

TEST(Harness, ControlClaimsRejectNamedGraphs) {
  const auto controls = negative_controls();
  auto status = [&](int k, const Graph &g) {
    GraphFacts facts(g, {});
    return controls[k].claim.check(facts, HypothesisMode::standing).status;
  };
  EXPECT_EQ(status(0, named::cycle(4)), Status::violated);
  EXPECT_EQ(status(1, named::path(6)), Status::violated);
  EXPECT_EQ(status(1, fixtures::triangle_plus_edge()), Status::violated);
  EXPECT_EQ(status(2, fixtures::six_unique_square_maximum()), Status::violated);
  EXPECT_EQ(status(1, named::path(4)), Status::holds);
}

TEST(Harness, CounterexampleRechecks) {
  auto v = run_statement(statement("vwc-ke-pendants"),
                         GraphFamily::exhaustive(1, 5).connected());
  ASSERT_FALSE(v.passed());
  ASSERT_TRUE(v.counterexample);
  EXPECT_EQ(v.counterexample->graph6, "BW");
  EXPECT_EQ(recheck(statement("vwc-ke-pendants"), v.counterexample->graph6),
            Status::violated);
}

TEST(Harness, StarsRefutePendantCountCharacterization) {
  for (int leaves = 2; leaves <= 6; ++leaves)
    EXPECT_EQ(check("vwc-ke-pendants", named::star(leaves)), Status::violated);
  EXPECT_EQ(check("vwc-ke-pendants", named::path(4)), Status::holds);
  EXPECT_EQ(check("ke-square-stable", named::star(3)), Status::holds);
}

TEST(Harness, TwoIsolatedVerticesBreakLiteralReadings) {
  Graph two = named::empty(2);
  for (std::string_view id : {"very-well-covered-ke", "alpha-at-most-mu",
                              "square-ke-perfect-matching", "ke-square-stable"}) {
    EXPECT_EQ(check(id, two, HypothesisMode::standing), Status::not_applicable) << id;
    EXPECT_EQ(check(id, two, HypothesisMode::literal), Status::violated) << id;
  }
}

TEST(Harness, HypothesisFilters) {
  EXPECT_EQ(check("ke-square-stable", fixtures::not_ke_five()), Status::not_applicable);
  EXPECT_EQ(check("tree-equivalences", named::cycle(4)), Status::not_applicable);
  EXPECT_EQ(check("girth-six-equivalences", named::cycle(7)), Status::not_applicable);
  EXPECT_EQ(check("girth-six-equivalences", named::cycle(8)), Status::holds);
  EXPECT_EQ(check("ke-square-dichotomy", named::cycle(4)), Status::not_applicable);
  EXPECT_EQ(check("closed-neighborhood-deletion", named::complete(4)),
            Status::not_applicable);
  EXPECT_EQ(check("componentwise-square-stable", named::path(3)),
            Status::not_applicable);
  EXPECT_EQ(check("componentwise-square-stable",
                  named::disjoint_union(named::path(4), named::cycle(4))),
            Status::holds);
}

TEST(Harness, NamedGraphsSatisfyTheirStatements) {
  EXPECT_EQ(check("square-core-simplicial", fixtures::eight_vertex_simplicial_core()),
            Status::holds);
  EXPECT_EQ(check("ke-square-dichotomy", fixtures::five_square_stable_not_ke()),
            Status::holds);
  EXPECT_EQ(check("pendant-matching-square-stable", fixtures::three_pendant_components()),
            Status::holds);
  EXPECT_EQ(check("pendant-matching-square-stable", named::path(2)), Status::holds);
  EXPECT_EQ(check("simplex-equivalences", fixtures::eleven_square_stable()),
            Status::holds);
}

TEST(Harness, ResultsDoNotDependOnJobs) {
  auto family = GraphFamily::random_gnp(4, 9, 0.4, 400, 11);
  RunOptions one, four;
  four.jobs = 4;
  auto a = run_statements(all_statements(), family, one);
  auto b = run_statements(all_statements(), family, four);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    EXPECT_EQ(report::to_json(a[k]).dump(), report::to_json(b[k]).dump());
}

TEST(Harness, ConnectedFilterCountsAsFiltered) {
  auto v = run_statement(statement("inequality-chain"),
                         GraphFamily::exhaustive(4, 4).connected());
  EXPECT_EQ(v.graphs_checked, 38u);
  EXPECT_EQ(v.graphs_filtered, 64u - 38u);
}

TEST(Harness, BudgetExhaustionIsSkipped) {
  kess::detail::Rng rng(2);
  std::vector<std::string> lines{encode_graph6(random_gnp_graph(60, 0.1, rng))};
  RunOptions opts;
  opts.budget = SolverBudget{50, 60};
  auto v = run_statement(statement("inequality-chain"), GraphFamily::graph6(lines),
                         opts);
  EXPECT_EQ(v.graphs_skipped, 1u);
  EXPECT_FALSE(v.complete());
  EXPECT_TRUE(v.passed());
}
