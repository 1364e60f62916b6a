#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "kess/budget.hpp"
#include "kess/generators.hpp"
#include "kess/harness/statements.hpp"
#include "kess/io/graph6.hpp"

namespace kess::harness {

struct Counterexample {
  std::string graph6;
  Json detail;
};

/// Outcome of checking one statement over one family.
struct TheoremVerdict {
  std::string statement;
  std::string family;
  std::uint64_t graphs_checked = 0;
  std::uint64_t graphs_filtered = 0;
  std::uint64_t graphs_skipped = 0;
  std::uint64_t violations = 0;
  /// Lexicographically least graph6 among the violating graphs.
  std::optional<Counterexample> counterexample;

  bool passed() const { return violations == 0; }
  /// False when some graph ran out of budget.
  bool complete() const { return graphs_skipped == 0; }
};

struct RunOptions {
  SolverBudget budget;
  HypothesisMode mode = HypothesisMode::standing;
  unsigned jobs = 1;
};

namespace detail {

inline void absorb(TheoremVerdict &into, const TheoremVerdict &from) {
  into.graphs_checked += from.graphs_checked;
  into.graphs_filtered += from.graphs_filtered;
  into.graphs_skipped += from.graphs_skipped;
  into.violations += from.violations;
  if (from.counterexample &&
      (!into.counterexample ||
       from.counterexample->graph6 < into.counterexample->graph6))
    into.counterexample = from.counterexample;
}

inline void record(TheoremVerdict &v, const Statement &s, GraphFacts &facts,
                   HypothesisMode mode) {
  CheckResult r;
  try {
    r = s.check(facts, mode);
  } catch (const BudgetExhausted &) {
    ++v.graphs_skipped;
    return;
  }
  switch (r.status) {
  case Status::not_applicable:
    ++v.graphs_filtered;
    break;
  case Status::holds:
    ++v.graphs_checked;
    break;
  case Status::violated: {
    ++v.graphs_checked;
    ++v.violations;
    std::string code = encode_graph6(facts.graph());
    if (!v.counterexample || code < v.counterexample->graph6)
      v.counterexample = Counterexample{std::move(code), std::move(r.detail)};
    break;
  }
  }
}

} // namespace detail

/// Checks every statement on every graph of the family. Graphs removed by
/// the family's connectivity filter count as filtered for each statement.
/// The result does not depend on `jobs`.
inline std::vector<TheoremVerdict>
run_statements(std::span<const Statement> statements,
               const GraphFamily &family, const RunOptions &options = {}) {
  FamilyStream stream(family);
  const std::string label = family.describe();
  auto fresh = [&] {
    std::vector<TheoremVerdict> out;
    for (const Statement &s : statements) {
      TheoremVerdict v;
      v.statement = std::string(s.id);
      v.family = label;
      out.push_back(std::move(v));
    }
    return out;
  };

  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::vector<TheoremVerdict>> partial(jobs, fresh());
  auto work = [&](unsigned worker) {
    auto &mine = partial[worker];
    for (std::uint64_t i = worker; i < stream.size(); i += jobs) {
      GraphFacts facts(stream.at(i), options.budget);
      if (family.connected_only && !facts.connected()) {
        for (auto &v : mine)
          ++v.graphs_filtered;
        continue;
      }
      for (std::size_t k = 0; k < statements.size(); ++k)
        detail::record(mine[k], statements[k], facts, options.mode);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
      pool.emplace_back(work, w);
    for (auto &t : pool)
      t.join();
  }

  auto total = fresh();
  for (const auto &p : partial)
    for (std::size_t k = 0; k < total.size(); ++k)
      detail::absorb(total[k], p[k]);
  return total;
}

inline TheoremVerdict run_statement(const Statement &statement,
                                    const GraphFamily &family,
                                    const RunOptions &options = {}) {
  return run_statements(std::span<const Statement>(&statement, 1), family,
                        options)
      .front();
}

/// Re-analyzes a graph6 string standalone against one statement.
inline Status recheck(const Statement &statement, std::string_view graph6,
                      const RunOptions &options = {}) {
  GraphFacts facts(decode_graph6(graph6), options.budget);
  return statement.check(facts, options.mode).status;
}

struct ControlOutcome {
  TheoremVerdict verdict;
  /// True when the planted claim was refuted, i.e. the harness can fail.
  bool refuted() const { return !verdict.passed() && verdict.counterexample; }
};

/// Runs every planted false claim over exhaustive graphs up to its order.
inline std::vector<ControlOutcome>
run_negative_controls(const RunOptions &options = {}) {
  std::vector<ControlOutcome> out;
  for (const Control &c : negative_controls())
    out.push_back({run_statement(c.claim, GraphFamily::exhaustive(1, c.max_order),
                                 options)});
  return out;
}

} // namespace kess::harness
