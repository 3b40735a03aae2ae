#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hsolab/enumeration.hpp"
#include "hsolab/indices.hpp"
#include "oracles.hpp"

using namespace hsolab;

namespace {

const double r2 = std::sqrt(2.0);
const double r5 = std::sqrt(5.0);

bool rel_close(double a, double b, double rel) { return std::fabs(a - b) <= rel * std::max(1.0, std::fabs(b)); }

}  // namespace

TEST_CASE("edge contributions") {
  CHECK(edge_contribution(IndexKind::kHSO, 1, 2) == doctest::Approx(2.23606797750).epsilon(1e-12));
  CHECK(edge_contribution(IndexKind::kCDSO, 1, 2) == doctest::Approx(1.11803398875).epsilon(1e-12));
  for (int k = 1; k <= 40; ++k) CHECK(edge_contribution(IndexKind::kHSO, k, k) == doctest::Approx(r2));
  CHECK(edge_contribution(IndexKind::kSO, 3, 4) == doctest::Approx(5.0));
  CHECK(edge_contribution(IndexKind::kDSO, 3, 4) == doctest::Approx(5.0 / 7.0));
  CHECK(edge_contribution(IndexKind::kM1, 3, 4) == doctest::Approx(7.0));
  CHECK(edge_contribution(IndexKind::kHSO, 2, 7) == edge_contribution(IndexKind::kHSO, 7, 2));
  CHECK_THROWS_AS(edge_contribution(IndexKind::kHSO, 0, 2), std::domain_error);
}

TEST_CASE("index names round trip") {
  for (const IndexKind k : kAllIndices) CHECK(parse_index_kind(to_string(k)) == k);
  CHECK_FALSE(parse_index_kind("abc").has_value());
}

TEST_CASE("index values on small graphs") {
  CHECK(index_value(family(Family::kCycle, 5), IndexKind::kHSO) == doctest::Approx(7.07106781187).epsilon(1e-12));
  CHECK(index_value(family(Family::kStar, 4), IndexKind::kCDSO) == doctest::Approx(3.16227766017).epsilon(1e-12));
  CHECK(index_value(family(Family::kPath, 4), IndexKind::kHSO) == doctest::Approx(2 * r5 + r2).epsilon(1e-14));
  CHECK(index_value(family(Family::kPath, 4), IndexKind::kHSO) == doctest::Approx(5.88634951737).epsilon(1e-11));
  CHECK(index_value(family(Family::kComplete, 4), IndexKind::kCDSO) == doctest::Approx(8.48528137424).epsilon(1e-12));
  CHECK(index_value(family(Family::kPath, 2), IndexKind::kHSO) == doctest::Approx(r2));
  CHECK(index_value(family(Family::kPath, 1), IndexKind::kHSO) == 0.0);
  // M1 as a vertex sum of squared degrees.
  CHECK(index_value(family(Family::kStar, 6), IndexKind::kM1) == doctest::Approx(25.0 + 5.0));
}

TEST_CASE("index values agree with the edge-sum oracle") {
  for (int n = 2; n <= 6; ++n) {
    oracle::for_each_labeled(n, [&](const oracle::Matrix& m) {
      const std::vector<Edge> edges = m.edges();
      const Graph g = build_graph(n, edges);
      REQUIRE(rel_close(index_value(g, IndexKind::kSO), oracle::edge_sum(m, oracle::so), 1e-13));
      REQUIRE(rel_close(index_value(g, IndexKind::kDSO), oracle::edge_sum(m, oracle::dso), 1e-13));
      REQUIRE(rel_close(index_value(g, IndexKind::kHSO), oracle::edge_sum(m, oracle::hso), 1e-13));
      REQUIRE(rel_close(index_value(g, IndexKind::kCDSO), oracle::edge_sum(m, oracle::cdso), 1e-13));
      REQUIRE(rel_close(index_value(g, IndexKind::kM1), oracle::edge_sum(m, oracle::m1), 1e-13));
    });
  }
}

TEST_CASE("index values are invariant under relabelling") {
  const Graph g = build_graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {3, 5}});
  const std::vector<Vertex> perm = {5, 3, 1, 0, 2, 4};
  for (const IndexKind k : kAllIndices) CHECK(index_value(g.relabeled(perm), k) == doctest::Approx(index_value(g, k)));
}

TEST_CASE("closed forms") {
  CHECK(closed_form(IndexKind::kCDSO, Family::kPath, 5) == doctest::Approx(5.06449510225).epsilon(1e-12));
  CHECK(closed_form(IndexKind::kCDSO, Family::kComplete, 6) == doctest::Approx(21.2132034356).epsilon(1e-12));
  CHECK_THROWS_AS(closed_form(IndexKind::kHSO, Family::kPath, 2), GraphError);
  CHECK(closed_form(IndexKind::kHSO, Family::kStar, 7) == doctest::Approx(6.0 * std::sqrt(37.0)));
}

TEST_CASE("closed forms match direct evaluation for 3 <= n <= 50") {
  const Family families[] = {Family::kPath, Family::kCycle, Family::kStar, Family::kComplete};
  for (const Family f : families) {
    for (int n = 3; n <= 50; ++n) {
      const Graph g = family(f, n);
      for (const IndexKind k : kAllIndices) {
        REQUIRE(rel_close(index_value(g, k), closed_form(k, f, n), 1e-12));
      }
    }
  }
}
