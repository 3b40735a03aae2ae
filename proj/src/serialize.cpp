#include "hsolab/serialize.hpp"

#include "hsolab/io.hpp"

namespace hsolab {

namespace {

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json extremal_body(const ExtremalResult& r) {
  Json body = Json::object();
  body["class"] = describe_class(r.graph_class);
  body["index"] = to_string(r.kind);
  body["direction"] = to_string(r.direction);
  body["optimum"] = r.optimum;
  body["examined"] = r.examined;
  Json witnesses = Json::array();
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    const WitnessProperties& p = r.properties[i];
    Json w = Json::object();
    w["graph6"] = write_graph6(r.witnesses[i]);
    w["has_dominating_vertex"] = p.has_dominating_vertex;
    w["min_degree"] = p.min_degree;
    w["max_degree"] = p.max_degree;
    w["degrees_in_2_3"] = p.degrees_in_2_3;
    witnesses.push_back(std::move(w));
  }
  body["witnesses"] = std::move(witnesses);
  body["nearest_other"] = optional_number(r.nearest_other);
  body["near_tie_warning"] = r.near_tie_warning;
  return body;
}

}  // namespace

Json describe_class(const GraphClassSpec& cls) {
  Json j = Json::object();
  j["order"] = cls.order;
  switch (cls.constraint) {
    case GraphClassSpec::Constraint::kConnected: j["constraint"] = "connected"; break;
    case GraphClassSpec::Constraint::kTrees: j["constraint"] = "trees"; break;
    case GraphClassSpec::Constraint::kCyclomatic:
      j["constraint"] = "cyclomatic";
      j["cyclomatic"] = cls.cyclomatic;
      break;
  }
  return j;
}

Report index_report(const std::string& source, const Graph& g, std::span<const IndexKind> kinds) {
  Report rep{"index", Json::object()};
  rep.payload["source"] = source;
  rep.payload["graph6"] = write_graph6(g);
  rep.payload["n"] = g.order();
  rep.payload["m"] = g.size();
  for (const IndexKind kind : kinds) rep.payload[std::string(to_string(kind))] = index_value(g, kind);
  return rep;
}

Report bound_report(const std::string& source, const Graph& g, const BoundReport& r) {
  Report rep{"bound", Json::object()};
  rep.payload["source"] = source;
  rep.payload["graph6"] = write_graph6(g);
  rep.payload["bound"] = to_string(r.id);
  rep.payload["index"] = to_string(bound_index(r.id));
  rep.payload["value"] = r.value;
  rep.payload["lower"] = optional_number(r.lower);
  rep.payload["upper"] = optional_number(r.upper);
  rep.payload["hypothesis_met"] = r.hypothesis_met;
  rep.payload["holds"] = r.holds;
  rep.payload["equality_low"] = r.equality_low;
  rep.payload["equality_high"] = r.equality_high;
  rep.payload["predicted_low"] = r.predicted_low;
  rep.payload["predicted_high"] = r.predicted_high;
  rep.payload["structural_equality_predicted"] = r.structural_equality_predicted();
  rep.payload["verified"] = r.verified();
  return rep;
}

Report monotonicity_report(const std::string& source, const Graph& g, const MonotonicityReport& r) {
  Report rep{"monotonicity", Json::object()};
  rep.payload["source"] = source;
  rep.payload["graph6"] = write_graph6(g);
  rep.payload["u"] = r.u;
  rep.payload["v"] = r.v;
  rep.payload["hso_decrease_condition"] = r.hso_decrease_condition;
  rep.payload["hso_increase_condition"] = r.hso_increase_condition;
  rep.payload["cdso_decrease_condition"] = r.cdso_decrease_condition;
  rep.payload["cdso_increase_condition"] = r.cdso_increase_condition;
  rep.payload["delta_hso"] = r.delta_hso;
  rep.payload["delta_cdso"] = r.delta_cdso;
  rep.payload["consistent"] = r.consistent();
  return rep;
}

Report extremal_report(const ExtremalResult& r) { return Report{"extremal", extremal_body(r)}; }

Report conjecture_report_json(const ConjectureReport& r) {
  Report rep{"conjecture", Json::object()};
  rep.payload["order"] = r.order;
  rep.payload["cyclomatic"] = r.cyclomatic;
  rep.payload["cdso_min"] = extremal_body(r.cdso_min);
  rep.payload["hso_max"] = extremal_body(r.hso_max);
  rep.payload["cdso_max"] = extremal_body(r.cdso_max);
  rep.payload["hso_min"] = extremal_body(r.hso_min);
  rep.payload["cdso_min_dominating"] = r.cdso_min_dominating;
  rep.payload["hso_max_dominating"] = r.hso_max_dominating;
  rep.payload["dominating_vertex_all_witnesses"] = r.dominating_vertex_all_witnesses;
  Json degree = Json::object();
  degree["applicable"] = r.degree_conjecture_applicable;
  degree["cdso_max_degrees_in_2_3"] = r.cdso_max_degrees_in_2_3;
  degree["hso_min_degrees_in_2_3"] = r.hso_min_degrees_in_2_3;
  rep.payload["degree_conjecture"] = std::move(degree);
  return rep;
}

Report sweep_report(const SweepReport& r) {
  Report rep{"sweep", Json::object()};
  rep.payload["name"] = r.name;
  rep.payload["checked"] = r.checked;
  rep.payload["violations"] = static_cast<long long>(r.violations.size());
  rep.payload["passed"] = r.passed();
  Json first = Json::array();
  for (std::size_t i = 0; i < r.violations.size() && i < 10; ++i) {
    const SweepPoint& p = r.violations[i];
    first.push_back(Json::array({p.a, p.b, p.c, p.value}));
  }
  rep.payload["first_violations"] = std::move(first);
  return rep;
}

}  // namespace hsolab
