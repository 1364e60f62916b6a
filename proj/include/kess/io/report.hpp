#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "kess/harness/runner.hpp"
#include "kess/invariants.hpp"
#include "kess/io/graph6.hpp"
#include "kess/recognizers.hpp"

namespace kess::report {

using Json = nlohmann::ordered_json;

inline Json to_json(const Matching &m) {
  Json out = Json::array();
  for (const Edge &e : m)
    out.push_back(Json::array({e.u, e.v}));
  return out;
}

inline Json to_json(const Girth &g) {
  return g.is_acyclic() ? Json("acyclic") : Json(g.length());
}

inline Json flag(const Flag &f) { return f ? Json(*f) : Json(nullptr); }

template <typename T> Json maybe(const std::optional<T> &v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json to_json(const InvariantReport &r) {
  Json j;
  j["alpha"] = r.alpha.value;
  j["mu"] = r.mu.value;
  j["theta"] = r.theta.value;
  j["gamma"] = r.gamma.value;
  j["ind_dom"] = r.ind_dom.value;
  j["girth"] = to_json(r.girth);
  j["witnesses"] = {{"alpha", r.alpha.witness},
                    {"mu", to_json(r.mu.witness)},
                    {"theta", r.theta.witness},
                    {"gamma", r.gamma.witness},
                    {"ind_dom", r.ind_dom.witness}};
  return j;
}

inline Json to_json(const RecognitionProfile &p) {
  Json j;
  j["ke"] = flag(p.is_ke);
  j["well_covered"] = flag(p.is_well_covered);
  j["very_well_covered"] = flag(p.is_very_well_covered);
  j["square_stable"] = flag(p.is_square_stable);
  j["simplicial"] = flag(p.is_simplicial_graph);
  j["pendant_perfect_matching"] = flag(p.has_pendant_pm);
  j["one_simplex_per_vertex"] = flag(p.one_simplex_per_vertex);
  j["values"] = {{"alpha", maybe(p.alpha)},
                 {"alpha_square", maybe(p.alpha_square)},
                 {"mu", maybe(p.mu)}};
  Json c;
  c["pendant_perfect_matching"] =
      p.pendant_pm ? to_json(*p.pendant_pm) : Json(nullptr);
  c["distance3_maximum_stable_set"] = maybe(p.distance3_set);
  c["smallest_maximal_stable_set"] = maybe(p.smallest_maximal_stable);
  c["maximum_stable_set"] = maybe(p.maximum_stable);
  c["maximum_matching"] =
      p.maximum_matching ? to_json(*p.maximum_matching) : Json(nullptr);
  c["simplicial_vertices"] = p.simplicial;
  j["certificates"] = c;
  j["exhausted"] = p.exhausted;
  return j;
}

inline Json to_json(const harness::TheoremVerdict &v) {
  Json j;
  j["statement"] = v.statement;
  j["family"] = v.family;
  j["passed"] = v.passed();
  j["complete"] = v.complete();
  j["graphs_checked"] = v.graphs_checked;
  j["graphs_filtered"] = v.graphs_filtered;
  j["graphs_skipped"] = v.graphs_skipped;
  j["violations"] = v.violations;
  if (v.counterexample)
    j["counterexample"] = {{"graph6", v.counterexample->graph6},
                           {"detail", v.counterexample->detail}};
  else
    j["counterexample"] = nullptr;
  return j;
}

/// One line of `analyze` output. Timing is opt-in so default reports stay
/// byte-identical across runs.
struct AnalysisRecord {
  std::string graph6;
  int order = 0;
  InvariantReport invariants;
  RecognitionProfile profile;
  std::optional<std::map<std::string, long long>> timing_us;
};

inline Json to_json(const AnalysisRecord &a) {
  Json j;
  j["graph6"] = a.graph6;
  j["n"] = a.order;
  j["invariants"] = to_json(a.invariants);
  j["profile"] = to_json(a.profile);
  if (a.timing_us) {
    Json t;
    for (const auto &[k, v] : *a.timing_us)
      t[k] = v;
    j["timing_us"] = t;
  }
  return j;
}

} // namespace kess::report
