#include "hsolab/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>

namespace hsolab {

std::string_view to_string(Direction direction) { return direction == Direction::kMin ? "min" : "max"; }

WitnessProperties witness_properties(const Graph& g) {
  const StructuralPredicates sp = structural_predicates(g);
  const auto small = [](int d) { return d == 2 || d == 3; };
  return {sp.has_dominating_vertex, sp.min_degree, sp.max_degree, small(sp.min_degree) && small(sp.max_degree)};
}

namespace {

struct PassOne {
  double best = 0.0;
  long long seen = 0;
};

struct PassTwo {
  std::map<std::vector<std::uint8_t>, Graph> witnesses;
  std::optional<double> nearest;
};

}  // namespace

ExtremalResult find_extremal(const EnumerationPlan& requested, IndexKind kind, Direction direction, int workers,
                             double tol) {
  // Both passes walk the same graphs; canonicalise a dedup plan only once.
  EnumerationPlan plan = requested;
  if (plan.dedup) {
    plan = EnumerationPlan{requested.graph_class, false,
                           std::make_shared<const std::vector<Graph>>(enumerate_all(requested, workers))};
  }
  const bool want_min = direction == Direction::kMin;
  const double start = want_min ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();

  // Pass 1: the optimum, as a commutative min/max reduction.
  std::vector<PassOne> first(static_cast<std::size_t>(std::max(workers, 1)), PassOne{start, 0});
  enumerate_parallel(plan, workers, [&](int w, const Graph& g) {
    auto& slot = first[static_cast<std::size_t>(w)];
    const double v = index_value(g, kind);
    slot.best = want_min ? std::min(slot.best, v) : std::max(slot.best, v);
    ++slot.seen;
  });
  ExtremalResult result;
  result.graph_class = plan.graph_class;
  result.kind = kind;
  result.direction = direction;
  result.optimum = start;
  for (const PassOne& p : first) {
    result.optimum = want_min ? std::min(result.optimum, p.best) : std::max(result.optimum, p.best);
    result.examined += p.seen;
  }
  if (result.examined == 0) throw EnumerationError("empty class: " + plan.graph_class.describe());

  // Pass 2: every attainer within tol, canonicalised.
  std::vector<PassTwo> second(first.size());
  enumerate_parallel(plan, workers, [&](int w, const Graph& g) {
    auto& slot = second[static_cast<std::size_t>(w)];
    const double v = index_value(g, kind);
    const double gap = std::fabs(v - result.optimum);
    if (gap <= tol) {
      auto code = canonical_code(g);
      if (!slot.witnesses.contains(code)) slot.witnesses.emplace(std::move(code), canonical_form(g));
    } else if (!slot.nearest || gap < std::fabs(*slot.nearest - result.optimum)) {
      slot.nearest = v;
    }
  });
  std::map<std::vector<std::uint8_t>, Graph> merged;
  for (PassTwo& p : second) {
    merged.merge(p.witnesses);
    if (p.nearest &&
        (!result.nearest_other || std::fabs(*p.nearest - result.optimum) < std::fabs(*result.nearest_other - result.optimum))) {
      result.nearest_other = p.nearest;
    }
  }
  for (auto& [code, g] : merged) {
    result.properties.push_back(witness_properties(g));
    result.witnesses.push_back(std::move(g));
  }
  result.near_tie_warning =
      result.nearest_other && std::fabs(*result.nearest_other - result.optimum) <= kNearTieWarning;
  return result;
}

ConjectureReport conjecture_report(int n, int ell, int workers) {
  if (n < 4 || n > kInternalEnumerationCap) {
    throw EnumerationError("conjecture report needs 4 <= n <= " + std::to_string(kInternalEnumerationCap));
  }
  if (ell < 1) throw EnumerationError("conjecture report needs cyclomatic number >= 1");
  const int max_ell = n * (n - 1) / 2 - n + 1;
  if (ell > max_ell) {
    throw EnumerationError("empty class: connected graphs of order " + std::to_string(n) +
                           " have cyclomatic number at most " + std::to_string(max_ell));
  }
  const auto plan = EnumerationPlan::internal(GraphClassSpec::with_cyclomatic(n, ell));
  ConjectureReport rep;
  rep.order = n;
  rep.cyclomatic = ell;
  rep.cdso_min = find_extremal(plan, IndexKind::kCDSO, Direction::kMin, workers);
  rep.hso_max = find_extremal(plan, IndexKind::kHSO, Direction::kMax, workers);
  rep.cdso_max = find_extremal(plan, IndexKind::kCDSO, Direction::kMax, workers);
  rep.hso_min = find_extremal(plan, IndexKind::kHSO, Direction::kMin, workers);

  const auto all = [](const ExtremalResult& r, auto pred) {
    return std::all_of(r.properties.begin(), r.properties.end(), pred);
  };
  const auto dominating = [](const WitnessProperties& p) { return p.has_dominating_vertex; };
  const auto small_degrees = [](const WitnessProperties& p) { return p.degrees_in_2_3; };
  rep.cdso_min_dominating = all(rep.cdso_min, dominating);
  rep.hso_max_dominating = all(rep.hso_max, dominating);
  rep.dominating_vertex_all_witnesses = rep.cdso_min_dominating && rep.hso_max_dominating;
  rep.degree_conjecture_applicable = ell >= 2;
  rep.cdso_max_degrees_in_2_3 = all(rep.cdso_max, small_degrees);
  rep.hso_min_degrees_in_2_3 = all(rep.hso_min, small_degrees);
  return rep;
}

}  // namespace hsolab
