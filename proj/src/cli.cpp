#include "hsolab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "hsolab/bounds.hpp"
#include "hsolab/enumeration.hpp"
#include "hsolab/extremal.hpp"
#include "hsolab/io.hpp"
#include "hsolab/monotonicity.hpp"
#include "hsolab/serialize.hpp"

namespace hsolab::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string format = "json";
  int workers = 1;
  double tol = kEqualityTolerance;
  std::string input;
  std::string informat = "auto";
  std::string family;
  int n = 0;
  int ell = -1;
  std::vector<std::string> indices;
  bool exhaustive = false;
  bool dedup = false;
  bool include_unmet = false;
  std::string graph_class = "connected";
  std::string direction = "min";
  int smax = 500;
  int nmax = 300;
  int delta_max = 200;
  int dmax = 400;
  int kmax = 1000;
};

OutputFormat output_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  return OutputFormat::kHuman;
}

Family parse_family(const std::string& name) {
  for (const Family f : {Family::kPath, Family::kCycle, Family::kStar, Family::kComplete}) {
    if (name == to_string(f)) return f;
  }
  throw UsageError("unknown family '" + name + "'");
}

std::vector<IndexKind> selected_indices(const RunConfig& cfg) {
  if (cfg.indices.empty()) return {kAllIndices.begin(), kAllIndices.end()};
  std::vector<IndexKind> out;
  for (const std::string& name : cfg.indices) {
    const auto kind = parse_index_kind(name);
    if (!kind) throw UsageError("unknown index '" + name + "'");
    out.push_back(*kind);
  }
  return out;
}

InputFormat input_format(const std::string& name) {
  if (name == "g6" || name == "graph6") return InputFormat::kGraph6;
  if (name == "edgelist") return InputFormat::kEdgeList;
  return InputFormat::kAuto;
}

std::vector<GraphRecord> load_inputs(const RunConfig& cfg, std::istream& in) {
  if (!cfg.family.empty()) {
    if (cfg.n < 1) throw UsageError("--family needs --n");
    const std::string source = "family:" + cfg.family + ":" + std::to_string(cfg.n);
    return {GraphRecord{source, family(parse_family(cfg.family), cfg.n)}};
  }
  if (cfg.input.empty() || cfg.input == "-") return read_graphs(in, "stdin", input_format(cfg.informat));
  std::ifstream file(cfg.input, std::ios::binary);
  if (!file) throw UsageError("cannot open input '" + cfg.input + "'");
  return read_graphs(file, cfg.input, input_format(cfg.informat));
}

GraphClassSpec class_from(const RunConfig& cfg) {
  if (cfg.n < 1) throw UsageError("--n is required");
  if (cfg.ell >= 0 || cfg.graph_class == "cyclomatic") {
    if (cfg.ell < 0) throw UsageError("--class cyclomatic needs --ell");
    return GraphClassSpec::with_cyclomatic(cfg.n, cfg.ell);
  }
  if (cfg.graph_class == "trees") return GraphClassSpec::trees(cfg.n);
  return GraphClassSpec::connected(cfg.n);
}

EnumerationPlan plan_from(const RunConfig& cfg, std::istream& in) {
  const GraphClassSpec cls = class_from(cfg);
  if (cfg.input.empty()) return EnumerationPlan::internal(cls, cfg.dedup);
  if (cfg.input == "-") return EnumerationPlan::from_stream(cls, in, cfg.dedup);
  std::ifstream file(cfg.input, std::ios::binary);
  if (!file) throw UsageError("cannot open input '" + cfg.input + "'");
  return EnumerationPlan::from_stream(cls, file, cfg.dedup);
}

// --- subcommands ------------------------------------------------------------

int cmd_compute(const RunConfig& cfg, std::istream& in, ReportWriter& writer) {
  const auto kinds = selected_indices(cfg);
  for (const GraphRecord& rec : load_inputs(cfg, in)) writer.write(index_report(rec.source, rec.graph, kinds));
  return kExitOk;
}

struct BoundTally {
  long long graphs = 0;
  std::array<long long, kAllBounds.size()> checked{};
  std::array<long long, kAllBounds.size()> violations{};
  std::array<long long, kAllBounds.size()> mismatches{};
  std::array<long long, kAllBounds.size()> equalities{};
  std::vector<std::pair<Graph, BoundReport>> failures;
};

constexpr std::size_t kFailureSamples = 20;

void tally(BoundTally& t, const Graph& g, double tol) {
  ++t.graphs;
  for (const BoundReport& r : check_all(g, tol)) {
    const auto i = static_cast<std::size_t>(r.id);
    ++t.checked[i];
    if (!r.holds) ++t.violations[i];
    if (!r.equality_matches_prediction()) ++t.mismatches[i];
    if (r.equality_low || r.equality_high) ++t.equalities[i];
    if (!r.verified() && t.failures.size() < kFailureSamples) t.failures.emplace_back(g, r);
  }
}

int cmd_bounds(const RunConfig& cfg, std::istream& in, ReportWriter& writer) {
  if (!cfg.exhaustive) {
    bool ok = true;
    for (const GraphRecord& rec : load_inputs(cfg, in)) {
      for (const BoundReport& r : check_all(rec.graph, cfg.tol, cfg.include_unmet)) {
        ok = ok && r.verified();
        writer.write(bound_report(rec.source, rec.graph, r));
      }
    }
    return ok ? kExitOk : kExitVerificationFailure;
  }
  const EnumerationPlan plan = plan_from(cfg, in);
  std::vector<BoundTally> parts(static_cast<std::size_t>(cfg.workers));
  enumerate_parallel(plan, cfg.workers,
                     [&](int w, const Graph& g) { tally(parts[static_cast<std::size_t>(w)], g, cfg.tol); });
  BoundTally total;
  for (BoundTally& p : parts) {
    total.graphs += p.graphs;
    for (std::size_t i = 0; i < kAllBounds.size(); ++i) {
      total.checked[i] += p.checked[i];
      total.violations[i] += p.violations[i];
      total.mismatches[i] += p.mismatches[i];
      total.equalities[i] += p.equalities[i];
    }
    total.failures.insert(total.failures.end(), p.failures.begin(), p.failures.end());
  }
  std::sort(total.failures.begin(), total.failures.end(), [](const auto& a, const auto& b) {
    const std::string ga = write_graph6(a.first);
    const std::string gb = write_graph6(b.first);
    return ga != gb ? ga < gb : a.second.id < b.second.id;
  });
  if (total.failures.size() > kFailureSamples) total.failures.erase(total.failures.begin() + kFailureSamples, total.failures.end());
  for (const auto& [g, r] : total.failures) writer.write(bound_report("exhaustive", g, r));

  bool ok = true;
  for (std::size_t i = 0; i < kAllBounds.size(); ++i) {
    Report rep{"summary", Json::object()};
    rep.payload["command"] = "bounds";
    rep.payload["class"] = describe_class(plan.graph_class);
    rep.payload["graphs"] = total.graphs;
    rep.payload["bound"] = to_string(kAllBounds[i]);
    rep.payload["checked"] = total.checked[i];
    rep.payload["violations"] = total.violations[i];
    rep.payload["equality_mismatches"] = total.mismatches[i];
    rep.payload["equality_cases"] = total.equalities[i];
    writer.write(rep);
    ok = ok && total.violations[i] == 0 && total.mismatches[i] == 0;
  }
  return ok ? kExitOk : kExitVerificationFailure;
}

struct MonoTally {
  long long graphs = 0;
  long long pairs = 0;
  std::array<long long, 4> satisfied{};
  long long inconsistent = 0;
  long long hso_decreasing = 0;
  std::vector<std::pair<Graph, MonotonicityReport>> failures;
};

int cmd_monotonicity(const RunConfig& cfg, std::istream& in, ReportWriter& writer) {
  if (!cfg.exhaustive) {
    bool ok = true;
    for (const GraphRecord& rec : load_inputs(cfg, in)) {
      for (const MonotonicityReport& r : scan_graph(rec.graph)) {
        ok = ok && r.consistent(cfg.tol);
        writer.write(monotonicity_report(rec.source, rec.graph, r));
      }
    }
    return ok ? kExitOk : kExitVerificationFailure;
  }
  const EnumerationPlan plan = plan_from(cfg, in);
  std::vector<MonoTally> parts(static_cast<std::size_t>(cfg.workers));
  enumerate_parallel(plan, cfg.workers, [&](int w, const Graph& g) {
    MonoTally& t = parts[static_cast<std::size_t>(w)];
    ++t.graphs;
    for (const MonotonicityReport& r : scan_graph(g)) {
      ++t.pairs;
      t.satisfied[0] += r.hso_decrease_condition;
      t.satisfied[1] += r.hso_increase_condition;
      t.satisfied[2] += r.cdso_decrease_condition;
      t.satisfied[3] += r.cdso_increase_condition;
      if (r.delta_hso < -cfg.tol) ++t.hso_decreasing;
      if (!r.consistent(cfg.tol)) {
        ++t.inconsistent;
        if (t.failures.size() < kFailureSamples) t.failures.emplace_back(g, r);
      }
    }
  });
  MonoTally total;
  for (MonoTally& p : parts) {
    total.graphs += p.graphs;
    total.pairs += p.pairs;
    for (std::size_t i = 0; i < 4; ++i) total.satisfied[i] += p.satisfied[i];
    total.inconsistent += p.inconsistent;
    total.hso_decreasing += p.hso_decreasing;
    total.failures.insert(total.failures.end(), p.failures.begin(), p.failures.end());
  }
  for (const auto& [g, r] : total.failures) writer.write(monotonicity_report("exhaustive", g, r));
  Report rep{"summary", Json::object()};
  rep.payload["command"] = "monotonicity";
  rep.payload["class"] = describe_class(plan.graph_class);
  rep.payload["graphs"] = total.graphs;
  rep.payload["pairs"] = total.pairs;
  rep.payload["hso_decrease_condition"] = total.satisfied[0];
  rep.payload["hso_increase_condition"] = total.satisfied[1];
  rep.payload["cdso_decrease_condition"] = total.satisfied[2];
  rep.payload["cdso_increase_condition"] = total.satisfied[3];
  rep.payload["hso_decreasing_additions"] = total.hso_decreasing;
  rep.payload["inconsistent"] = total.inconsistent;
  writer.write(rep);
  return total.inconsistent == 0 ? kExitOk : kExitVerificationFailure;
}

int cmd_extremal(const RunConfig& cfg, std::istream& in, ReportWriter& writer) {
  const auto kinds = selected_indices(cfg);
  if (cfg.indices.empty() || kinds.size() != 1) throw UsageError("extremal needs exactly one --index");
  if (cfg.direction != "min" && cfg.direction != "max") throw UsageError("--direction must be min or max");
  const Direction dir = cfg.direction == "min" ? Direction::kMin : Direction::kMax;
  writer.write(extremal_report(find_extremal(plan_from(cfg, in), kinds.front(), dir, cfg.workers, cfg.tol)));
  return kExitOk;
}

int cmd_conjectures(const RunConfig& cfg, ReportWriter& writer) {
  if (cfg.n < 1) throw UsageError("--n is required");
  if (cfg.ell < 0) throw UsageError("--ell is required");
  writer.write(conjecture_report_json(conjecture_report(cfg.n, cfg.ell, cfg.workers)));
  return kExitOk;
}

int cmd_sweeps(const RunConfig& cfg, ReportWriter& writer) {
  if (cfg.smax < 8) throw UsageError("--smax must be at least 8");
  if (cfg.nmax < 3) throw UsageError("--nmax must be at least 3");
  const std::vector<SweepReport> sweeps = {
      sweep_phi_sign(IndexKind::kHSO, cfg.smax), sweep_phi_sign(IndexKind::kCDSO, cfg.smax),
      sweep_deng(cfg.nmax),  sweep_aux_F(cfg.smax),
      sweep_min_degree_gap(cfg.delta_max, cfg.dmax), sweep_cdso_decrease(cfg.kmax),
  };
  bool ok = true;
  for (const SweepReport& s : sweeps) {
    ok = ok && s.passed();
    writer.write(sweep_report(s));
  }
  return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_roundtrip(const RunConfig& cfg, std::istream& in, ReportWriter& writer) {
  long long checked = 0;
  long long failures = 0;
  const auto check = [&](const Graph& g) {
    ++checked;
    const std::string g6 = write_graph6(g);
    const bool ok = parse_graph6(g6) == g && parse_edge_list(write_edge_list(g)) == g;
    if (!ok) ++failures;
  };
  std::string scope;
  if (cfg.input.empty()) {
    const int top = cfg.n > 0 ? cfg.n : 6;
    for (int n = 1; n <= top; ++n) enumerate(EnumerationPlan::internal(GraphClassSpec::connected(n)), check);
    scope = "connected n<=" + std::to_string(top);
  } else {
    // Byte-exact re-encoding of every input line.
    std::ifstream file;
    std::istream* src = &in;
    if (cfg.input != "-") {
      file.open(cfg.input, std::ios::binary);
      if (!file) throw UsageError("cannot open input '" + cfg.input + "'");
      src = &file;
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(*src, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line == kGraph6Header) continue;
      Graph g = [&] {
        try {
          return parse_graph6(line);
        } catch (const ParseError& e) {
          throw ParseError(e.code(), e.offset(), cfg.input + ":" + std::to_string(line_no) + ": " + e.what());
        }
      }();
      check(g);
      const std::string_view body = std::string_view(line).starts_with(kGraph6Header)
                                        ? std::string_view(line).substr(kGraph6Header.size())
                                        : std::string_view(line);
      if (write_graph6(g) != body) ++failures;
    }
    scope = cfg.input;
  }
  Report rep{"roundtrip", Json::object()};
  rep.payload["scope"] = scope;
  rep.payload["checked"] = checked;
  rep.payload["failures"] = failures;
  writer.write(rep);
  return failures == 0 ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperbolic Sombor / complementary diminished Sombor index laboratory", "hsolab"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "human"}));
    sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--tol", cfg.tol, "Equality tolerance")->check(CLI::PositiveNumber);
  };
  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "Input file, or - for standard input");
    sub->add_option("--informat", cfg.informat, "Input format")->check(CLI::IsMember({"auto", "g6", "graph6", "edgelist"}));
    sub->add_option("--family", cfg.family, "Named family")->check(CLI::IsMember({"path", "cycle", "star", "complete"}));
  };
  const auto add_order = [&](CLI::App* sub) {
    sub->add_option("--n,--order", cfg.n, "Graph order");
  };
  const auto add_class = [&](CLI::App* sub) {
    sub->add_option("--ell", cfg.ell, "Cyclomatic number");
    sub->add_option("--class", cfg.graph_class, "Graph class")->check(CLI::IsMember({"connected", "trees", "cyclomatic"}));
    sub->add_flag("--dedup", cfg.dedup, "One graph per isomorphism class");
  };

  auto* compute = app.add_subcommand("compute", "Index values for input graphs");
  add_common(compute);
  add_input(compute);
  add_order(compute);
  compute->add_option("--index", cfg.indices, "Indices (so, dso, hso, cdso, m1)");

  auto* bounds = app.add_subcommand("bounds", "Check every applicable bound");
  add_common(bounds);
  add_input(bounds);
  add_order(bounds);
  add_class(bounds);
  bounds->add_flag("--exhaustive", cfg.exhaustive, "All connected graphs of order --n");
  bounds->add_flag("--all", cfg.include_unmet, "Also report bounds whose hypothesis fails");

  auto* mono = app.add_subcommand("monotonicity", "Classify non-adjacent pairs");
  add_common(mono);
  add_input(mono);
  add_order(mono);
  add_class(mono);
  mono->add_flag("--exhaustive", cfg.exhaustive, "All connected graphs of order --n");

  auto* extremal = app.add_subcommand("extremal", "Minimise or maximise an index over a class");
  add_common(extremal);
  add_order(extremal);
  add_class(extremal);
  extremal->add_option("--input", cfg.input, "graph6 stream instead of internal enumeration");
  extremal->add_option("--index", cfg.indices, "Index")->required();
  extremal->add_option("--direction", cfg.direction, "min or max");

  auto* conj = app.add_subcommand("conjectures", "Extremal witnesses for a cyclomatic class");
  add_common(conj);
  add_order(conj);
  conj->add_option("--ell", cfg.ell, "Cyclomatic number")->required();

  auto* sweeps = app.add_subcommand("sweeps", "Numeric sweeps of the auxiliary functions");
  add_common(sweeps);
  sweeps->add_option("--smax", cfg.smax, "Largest s for the lemma and F sweeps");
  sweeps->add_option("--nmax", cfg.nmax, "Largest n for the H sweep");
  sweeps->add_option("--delta-max", cfg.delta_max, "Largest minimum degree for the edge-addition sweep");
  sweeps->add_option("--dmax", cfg.dmax, "Largest neighbour degree for the edge-addition sweep");
  sweeps->add_option("--kmax", cfg.kmax, "Largest small degree for the CDSO decrease margin");

  auto* roundtrip = app.add_subcommand("roundtrip", "I/O self-test");
  add_common(roundtrip);
  add_order(roundtrip);
  roundtrip->add_option("--input", cfg.input, "graph6 stream to re-encode byte for byte");

  std::vector<std::string> argv_storage{"hsolab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hsolab: " << e.what() << '\n';
    return kExitUsage;
  }

  ReportWriter writer(out, output_format(cfg.format));
  try {
    if (compute->parsed()) return cmd_compute(cfg, in, writer);
    if (bounds->parsed()) return cmd_bounds(cfg, in, writer);
    if (mono->parsed()) return cmd_monotonicity(cfg, in, writer);
    if (extremal->parsed()) return cmd_extremal(cfg, in, writer);
    if (conj->parsed()) return cmd_conjectures(cfg, writer);
    if (sweeps->parsed()) return cmd_sweeps(cfg, writer);
    if (roundtrip->parsed()) return cmd_roundtrip(cfg, in, writer);
  } catch (const ParseError& e) {
    err << "hsolab: " << e.what() << " (offset " << e.offset() << ")\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "hsolab: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "hsolab: no subcommand\n";
  return kExitUsage;
}

}  // namespace hsolab::cli
