#include <cmath>

#include "doctest.h"
#include "hsolab/extremal.hpp"
#include "hsolab/io.hpp"
#include "oracles.hpp"

using namespace hsolab;

namespace {

const double r2 = std::sqrt(2.0);

ExtremalResult search(GraphClassSpec cls, IndexKind kind, Direction dir, bool dedup = false, int workers = 1) {
  return find_extremal(EnumerationPlan::internal(cls, dedup), kind, dir, workers);
}

bool graph6_list_equal(const ExtremalResult& a, const ExtremalResult& b) {
  if (a.witnesses.size() != b.witnesses.size()) return false;
  for (std::size_t i = 0; i < a.witnesses.size(); ++i)
    if (write_graph6(a.witnesses[i]) != write_graph6(b.witnesses[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("HSO extremes over connected graphs of order six") {
  const ExtremalResult lo = search(GraphClassSpec::connected(6), IndexKind::kHSO, Direction::kMin);
  CHECK(lo.optimum == doctest::Approx(6 * r2));
  REQUIRE(lo.witnesses.size() == 1);
  CHECK(is_cycle_graph(lo.witnesses[0]));
  CHECK(lo.examined == 26704);
  REQUIRE(lo.nearest_other.has_value());
  CHECK(*lo.nearest_other > lo.optimum + 1e-6);
  CHECK_FALSE(lo.near_tie_warning);

  const ExtremalResult hi = search(GraphClassSpec::connected(6), IndexKind::kHSO, Direction::kMax);
  CHECK(hi.optimum == doctest::Approx(5 * std::sqrt(26.0)));
  REQUIRE(hi.witnesses.size() == 1);
  CHECK(is_star_graph(hi.witnesses[0]));
  CHECK(hi.properties[0].has_dominating_vertex);
}

TEST_CASE("CDSO extremes over trees of order six") {
  const ExtremalResult hi = search(GraphClassSpec::trees(6), IndexKind::kCDSO, Direction::kMax);
  CHECK(hi.optimum == doctest::Approx(std::sqrt(5.0) + 3 * r2));
  REQUIRE(hi.witnesses.size() == 1);
  CHECK(is_path_graph(hi.witnesses[0]));

  const ExtremalResult lo = search(GraphClassSpec::trees(6), IndexKind::kCDSO, Direction::kMin);
  CHECK(lo.optimum == doctest::Approx(std::sqrt(26.0)));
  REQUIRE(lo.witnesses.size() == 1);
  CHECK(is_star_graph(lo.witnesses[0]));
}

TEST_CASE("dedup does not change the optimum") {
  for (const IndexKind k : {IndexKind::kHSO, IndexKind::kCDSO, IndexKind::kSO}) {
    for (const Direction d : {Direction::kMin, Direction::kMax}) {
      const auto cls = GraphClassSpec::with_cyclomatic(6, 2);
      const ExtremalResult a = search(cls, k, d, false);
      const ExtremalResult b = search(cls, k, d, true, 2);
      CHECK(a.optimum == doctest::Approx(b.optimum).epsilon(1e-14));
      CHECK(graph6_list_equal(a, b));
    }
  }
}

TEST_CASE("witnesses attain the optimum and nothing beats it") {
  // Oracle: brute force over every labeled graph of order 5.
  for (const Direction d : {Direction::kMin, Direction::kMax}) {
    const ExtremalResult r = search(GraphClassSpec::connected(5), IndexKind::kCDSO, d);
    double best = d == Direction::kMin ? 1e300 : -1e300;
    oracle::for_each_labeled(5, [&](const oracle::Matrix& m) {
      if (!oracle::connected(m)) return;
      const double v = oracle::edge_sum(m, oracle::cdso);
      best = d == Direction::kMin ? std::min(best, v) : std::max(best, v);
    });
    CHECK(r.optimum == doctest::Approx(best).epsilon(1e-13));
    for (const Graph& w : r.witnesses) CHECK(index_value(w, IndexKind::kCDSO) == doctest::Approx(r.optimum));
  }
}

TEST_CASE("witness properties") {
  const WitnessProperties s = witness_properties(family(Family::kStar, 5));
  CHECK(s.has_dominating_vertex);
  CHECK(s.min_degree == 1);
  CHECK(s.max_degree == 4);
  CHECK_FALSE(s.degrees_in_2_3);
  const WitnessProperties t = witness_properties(build_graph(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}));
  CHECK(t.degrees_in_2_3);
  CHECK(t.has_dominating_vertex);
}

TEST_CASE("empty classes are errors") {
  CHECK_THROWS_AS(search(GraphClassSpec::with_cyclomatic(5, 7), IndexKind::kHSO, Direction::kMin), EnumerationError);
  CHECK_THROWS_AS(conjecture_report(5, 7), EnumerationError);
  CHECK_THROWS_AS(conjecture_report(3, 1), EnumerationError);
  CHECK_THROWS_AS(conjecture_report(5, 0), EnumerationError);
}

TEST_CASE("conjecture reports") {
  const ConjectureReport u5 = conjecture_report(5, 1);
  CHECK(u5.order == 5);
  CHECK(u5.cyclomatic == 1);
  CHECK_FALSE(u5.cdso_min.witnesses.empty());
  CHECK_FALSE(u5.degree_conjecture_applicable);
  bool all_dominating = true;
  for (const auto& p : u5.cdso_min.properties) all_dominating &= p.has_dominating_vertex;
  CHECK(u5.cdso_min_dominating == all_dominating);

  const ConjectureReport b6 = conjecture_report(6, 2);
  CHECK(b6.degree_conjecture_applicable);
  REQUIRE_FALSE(b6.cdso_max.witnesses.empty());
  bool in_range = true;
  for (const auto& p : b6.cdso_max.properties) {
    CHECK(p.min_degree >= 1);
    in_range &= p.degrees_in_2_3;
  }
  CHECK(b6.cdso_max_degrees_in_2_3 == in_range);
  CHECK(b6.cdso_max.graph_class.cyclomatic == 2);
  CHECK(b6.hso_min.direction == Direction::kMin);
}
