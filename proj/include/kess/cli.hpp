#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "kess/generators.hpp"
#include "kess/harness/runner.hpp"
#include "kess/invariants.hpp"
#include "kess/io/edge_list.hpp"
#include "kess/io/graph6.hpp"
#include "kess/io/report.hpp"
#include "kess/recognizers.hpp"

namespace kess::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kUsage = 2,
  kBudget = 3,
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    parts.push_back(cur);
  if (!s.empty() && s.back() == sep)
    parts.emplace_back();
  return parts;
}

inline long long parse_int(const std::string &s, const std::string &what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used == s.size())
      return v;
  } catch (const std::logic_error &) {
  }
  throw UsageError("invalid " + what + ": '" + s + "'");
}

inline std::pair<int, int> parse_range(const std::string &s) {
  auto dash = s.find('-');
  if (dash == std::string::npos) {
    int n = static_cast<int>(parse_int(s, "order"));
    return {n, n};
  }
  return {static_cast<int>(parse_int(s.substr(0, dash), "order")),
          static_cast<int>(parse_int(s.substr(dash + 1), "order"))};
}

inline std::vector<std::string> read_lines_from(const std::string &path,
                                                std::istream &stdin_stream) {
  if (path == "-")
    return read_graph6_lines(stdin_stream);
  std::ifstream file(path);
  if (!file)
    throw UsageError("cannot open " + path);
  return read_graph6_lines(file);
}

} // namespace detail

/// Parses a family spec:
///   exhaustive:N | exhaustive:A-B | alltrees:A-B | gnp:A-B:P:COUNT |
///   trees:A-B:COUNT | ke:A-B:COUNT | graph6:PATH ('-' reads stdin)
inline GraphFamily parse_family(const std::string &spec, std::uint64_t seed,
                                std::istream &stdin_stream = std::cin) {
  auto parts = detail::split(spec, ':');
  if (parts.size() < 2)
    throw UsageError("family spec needs KIND:ARGS, got '" + spec + "'");
  const std::string &kind = parts[0];
  auto expect = [&](std::size_t k) {
    if (parts.size() != k)
      throw UsageError("family '" + kind + "' takes " + std::to_string(k - 1) +
                       " arguments");
  };
  auto count = [&](const std::string &s) {
    long long c = detail::parse_int(s, "count");
    if (c < 0)
      throw UsageError("count must be non-negative");
    return static_cast<std::size_t>(c);
  };
  if (kind == "graph6") {
    expect(2);
    return GraphFamily::graph6(detail::read_lines_from(parts[1], stdin_stream));
  }
  auto [lo, hi] = detail::parse_range(parts[1]);
  if (lo < 0 || hi < lo)
    throw UsageError("invalid order range in '" + spec + "'");
  if (kind == "exhaustive") {
    expect(2);
    return GraphFamily::exhaustive(lo, hi);
  }
  if (kind == "alltrees") {
    expect(2);
    return GraphFamily::all_trees(lo, hi);
  }
  if (kind == "gnp") {
    expect(4);
    double p = 0;
    try {
      std::size_t used = 0;
      p = std::stod(parts[2], &used);
      if (used != parts[2].size())
        throw std::invalid_argument(parts[2]);
    } catch (const std::logic_error &) {
      throw UsageError("invalid probability '" + parts[2] + "'");
    }
    if (!(p >= 0 && p <= 1))
      throw UsageError("probability must lie in [0, 1]");
    return GraphFamily::random_gnp(lo, hi, p, count(parts[3]), seed);
  }
  if (kind == "trees") {
    expect(3);
    return GraphFamily::random_trees(lo, hi, count(parts[2]), seed);
  }
  if (kind == "ke") {
    expect(3);
    return GraphFamily::random_ke(lo, hi, count(parts[2]), seed);
  }
  throw UsageError("unknown family kind '" + kind + "'");
}

struct Io {
  std::istream &in;
  std::ostream &out;
  std::ostream &err;
};

namespace detail {

struct InputOptions {
  std::string input = "-";
  std::string format = "graph6";
};

inline std::vector<Graph> read_graphs(const InputOptions &o, Io io) {
  std::vector<Graph> out;
  if (o.format == "edgelist") {
    std::ostringstream text;
    if (o.input == "-") {
      text << io.in.rdbuf();
    } else {
      std::ifstream file(o.input);
      if (!file)
        throw UsageError("cannot open " + o.input);
      text << file.rdbuf();
    }
    out.push_back(parse_edge_list(text.str()));
    return out;
  }
  auto lines = read_lines_from(o.input, io.in);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      out.push_back(decode_graph6(lines[i]));
    } catch (const Graph6Error &e) {
      throw UsageError("line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

inline void add_input(CLI::App *cmd, InputOptions &o) {
  cmd->add_option("-i,--input", o.input, "input file, '-' for stdin")
      ->capture_default_str();
  cmd->add_option("--format", o.format, "graph6 (one per line) or edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
}

inline void add_budget(CLI::App *cmd, SolverBudget &b) {
  cmd->add_option("--budget-nodes", b.max_nodes,
                  "search-node cap per solver call")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--budget-seconds", b.max_seconds,
                  "wall-clock cap per solver call")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

inline int analyze(const std::vector<Graph> &graphs, const SolverBudget &budget,
                   bool timing, Io io) {
  using Clock = std::chrono::steady_clock;
  int code = kOk;
  for (const Graph &g : graphs) {
    report::AnalysisRecord rec;
    rec.graph6 = encode_graph6(g);
    rec.order = g.order();
    std::map<std::string, long long> t;
    auto timed = [&](const char *name, auto &&fn) {
      auto start = Clock::now();
      fn();
      t[name] = std::chrono::duration_cast<std::chrono::microseconds>(
                    Clock::now() - start)
                    .count();
    };
    try {
      timed("alpha", [&] { rec.invariants.alpha = alpha(g, budget); });
      timed("mu", [&] { rec.invariants.mu = mu(g); });
      timed("theta", [&] { rec.invariants.theta = theta(g, budget); });
      timed("gamma", [&] { rec.invariants.gamma = gamma(g, budget); });
      timed("ind_dom", [&] { rec.invariants.ind_dom = ind_dom(g, budget); });
      rec.invariants.order = g.order();
      rec.invariants.girth = girth(g);
      if (g.order() > 0)
        timed("recognize", [&] { rec.profile = recognize(g, budget); });
    } catch (const BudgetExhausted &e) {
      report::Json j;
      j["graph6"] = rec.graph6;
      j["n"] = rec.order;
      j["error"] = e.what();
      io.out << j.dump() << '\n';
      code = kBudget;
      continue;
    }
    if (timing)
      rec.timing_us = std::move(t);
    io.out << report::to_json(rec).dump() << '\n';
  }
  return code;
}

} // namespace detail

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char *const *argv, Io io) {
  CLI::App app{"Exact invariants, class recognition and statement checking "
               "for square-stable graphs"};
  app.require_subcommand(1);

  SolverBudget budget;
  detail::InputOptions input;
  bool timing = false;
  std::vector<std::string> theorems{"all"};
  std::string family_spec;
  bool connected = false;
  bool literal = false;
  bool controls = false;
  bool list = false;
  std::uint64_t seed = 0;
  unsigned jobs = 1;

  auto *analyze = app.add_subcommand(
      "analyze", "exact invariants and class flags, one JSON line per graph");
  detail::add_input(analyze, input);
  detail::add_budget(analyze, budget);
  analyze->add_flag("--timing", timing, "include per-solver wall-clock times");

  auto *recognize_cmd =
      app.add_subcommand("recognize", "class membership profile as JSON");
  detail::add_input(recognize_cmd, input);
  detail::add_budget(recognize_cmd, budget);

  auto *square_cmd = app.add_subcommand("square", "graph6 of the square");
  detail::add_input(square_cmd, input);

  auto *verify = app.add_subcommand(
      "verify", "check statements over a graph family, one JSON verdict per "
                "line");
  verify->add_option("--theorem", theorems,
                     "statement id, 'all', or 'controls' (repeatable)")
      ->capture_default_str();
  verify->add_option("--family", family_spec, "graph family spec");
  verify->add_flag("--connected", connected, "keep connected graphs only");
  verify->add_flag("--literal", literal,
                   "drop the implicit connectivity hypothesis");
  verify->add_flag("--controls", controls, "also run the negative controls");
  verify->add_flag("--list", list, "list statement ids and exit");
  verify->add_option("--seed", seed, "64-bit seed for random families")
      ->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  detail::add_budget(verify, budget);

  auto *generate_cmd =
      app.add_subcommand("generate", "print a family as graph6 lines");
  generate_cmd->add_option("--family", family_spec, "graph family spec")
      ->required();
  generate_cmd->add_flag("--connected", connected,
                         "keep connected graphs only");
  generate_cmd->add_option("--seed", seed, "64-bit seed for random families")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e, io.out, io.err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze)
      return detail::analyze(detail::read_graphs(input, io), budget, timing,
                             io);

    if (*recognize_cmd) {
      int code = kOk;
      for (const Graph &g : detail::read_graphs(input, io)) {
        if (g.order() == 0)
          throw UsageError("recognize needs at least one vertex");
        auto profile = recognize(g, budget);
        report::Json j;
        j["graph6"] = encode_graph6(g);
        j["profile"] = report::to_json(profile);
        io.out << j.dump() << '\n';
        if (!profile.exhausted.empty())
          code = kBudget;
      }
      return code;
    }

    if (*square_cmd) {
      for (const Graph &g : detail::read_graphs(input, io))
        io.out << encode_graph6(square(g)) << '\n';
      return kOk;
    }

    if (*generate_cmd) {
      GraphFamily f = parse_family(family_spec, seed, io.in);
      f.connected(connected);
      for (const Graph &g : generate(f))
        io.out << encode_graph6(g) << '\n';
      return kOk;
    }

    // verify
    if (list) {
      for (const auto &s : harness::all_statements())
        io.out << s.id << "\t" << s.summary << '\n';
      return kOk;
    }
    harness::RunOptions options{budget,
                                literal ? harness::HypothesisMode::literal
                                        : harness::HypothesisMode::standing,
                                jobs};
    std::vector<harness::TheoremVerdict> verdicts;
    bool control_failed = false;
    std::vector<harness::Statement> chosen;
    for (const std::string &id : theorems) {
      if (id == "all") {
        for (const auto &s : harness::all_statements())
          chosen.push_back(s);
      } else if (id == "controls") {
        controls = true;
      } else if (const auto *s = harness::find_statement(id)) {
        chosen.push_back(*s);
      } else {
        throw UsageError("unknown statement '" + id +
                         "' (see verify --list)");
      }
    }
    if (!chosen.empty()) {
      if (family_spec.empty())
        throw UsageError("verify needs --family");
      GraphFamily f = parse_family(family_spec, seed, io.in);
      f.connected(connected);
      verdicts = harness::run_statements(chosen, f, options);
    }
    for (const auto &v : verdicts)
      io.out << report::to_json(v).dump() << '\n';
    if (controls) {
      for (const auto &c : harness::run_negative_controls(options)) {
        report::Json j = report::to_json(c.verdict);
        j["control_refuted"] = c.refuted();
        io.out << j.dump() << '\n';
        control_failed = control_failed || !c.refuted();
      }
    }
    bool violated = control_failed;
    bool skipped = false;
    for (const auto &v : verdicts) {
      violated = violated || !v.passed();
      skipped = skipped || !v.complete();
    }
    if (violated)
      return kViolation;
    return skipped ? kBudget : kOk;
  } catch (const UsageError &e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const EdgeListError &e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphError &e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument &e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error &e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExhausted &e) {
    io.err << "error: " << e.what() << '\n';
    return kBudget;
  }
}

} // namespace kess::cli
