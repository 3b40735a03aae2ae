#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "hsolab/enumeration.hpp"
#include "hsolab/graph.hpp"
#include "oracles.hpp"

using namespace hsolab;

namespace {

Graph make(int n, std::vector<Edge> edges) { return build_graph(n, edges); }

GraphErrc error_of(auto&& fn) {
  try {
    fn();
  } catch (const GraphError& e) {
    return e.code();
  }
  FAIL("expected GraphError");
  return GraphErrc::kEmptyOrder;
}

std::vector<int> degrees_of(const Graph& g) { return {g.degrees().begin(), g.degrees().end()}; }

Graph random_relabel(const Graph& g, std::mt19937& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

}  // namespace

TEST_CASE("build_graph records edges and degrees") {
  const Graph p3 = make(3, {{0, 1}, {1, 2}});
  CHECK(p3.order() == 3);
  CHECK(p3.size() == 2);
  CHECK(degrees_of(p3) == std::vector<int>{1, 2, 1});
  CHECK(p3.adjacent(1, 0));
  CHECK_FALSE(p3.adjacent(0, 2));

  const Graph k1 = make(1, {});
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);
}

TEST_CASE("build_graph rejects bad edge lists with distinct errors") {
  CHECK(error_of([] { make(3, {{0, 1}, {0, 1}}); }) == GraphErrc::kDuplicateEdge);
  CHECK(error_of([] { make(3, {{1, 0}, {0, 1}}); }) == GraphErrc::kDuplicateEdge);
  CHECK(error_of([] { make(3, {{1, 1}}); }) == GraphErrc::kSelfLoop);
  CHECK(error_of([] { make(3, {{0, 3}}); }) == GraphErrc::kEndpointOutOfRange);
  CHECK(error_of([] { make(3, {{-1, 2}}); }) == GraphErrc::kEndpointOutOfRange);
  CHECK(error_of([] { make(0, {}); }) == GraphErrc::kEmptyOrder);
  CHECK(error_of([] { make(65, {}); }) == GraphErrc::kOrderTooLarge);
}

TEST_CASE("from_adjacency validates symmetry") {
  CHECK(error_of([] { Graph::from_adjacency({0b10, 0b00}); }) == GraphErrc::kAsymmetricAdjacency);
  CHECK(error_of([] { Graph::from_adjacency({0b01}); }) == GraphErrc::kSelfLoop);
  CHECK(Graph::from_adjacency({0b10, 0b01}) == make(2, {{0, 1}}));
}

TEST_CASE("family constructors") {
  const Graph s5 = family(Family::kStar, 5);
  CHECK(s5.size() == 4);
  CHECK(degrees_of(s5) == std::vector<int>{4, 1, 1, 1, 1});
  CHECK(family(Family::kCycle, 3) == family(Family::kComplete, 3));
  CHECK(error_of([] { family(Family::kCycle, 2); }) == GraphErrc::kFamilyOrderTooSmall);
  CHECK(error_of([] { family(Family::kStar, 1); }) == GraphErrc::kFamilyOrderTooSmall);
  CHECK(family(Family::kPath, 1).size() == 0);
  CHECK(family(Family::kComplete, 7).size() == 21);
  CHECK(family(Family::kPath, 6).size() == 5);
}

TEST_CASE("connectivity and cyclomatic number") {
  const Graph two_k2 = make(4, {{0, 1}, {2, 3}});
  CHECK(is_connected(family(Family::kPath, 4)));
  CHECK_FALSE(is_connected(two_k2));
  CHECK(is_connected(make(1, {})));
  CHECK(component_count(two_k2) == 2);
  CHECK(component_count(make(5, {})) == 5);

  CHECK(cyclomatic_number(make(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}})) == 0);
  CHECK(cyclomatic_number(family(Family::kCycle, 5)) == 1);
  CHECK(cyclomatic_number(family(Family::kComplete, 4)) == 3);
  CHECK(cyclomatic_number(disjoint_union(family(Family::kCycle, 3), family(Family::kCycle, 4))) == 2);
}

TEST_CASE("structural predicates") {
  const StructuralPredicates s6 = structural_predicates(family(Family::kStar, 6));
  CHECK_FALSE(s6.is_regular);
  CHECK(s6.has_dominating_vertex);
  CHECK(s6.every_edge_touches_min_degree);
  CHECK(s6.every_edge_touches_max_degree);

  const StructuralPredicates c4 = structural_predicates(family(Family::kCycle, 4));
  CHECK(c4.is_regular);
  CHECK_FALSE(c4.has_dominating_vertex);
  CHECK(c4.min_degree == 2);
  CHECK(c4.max_degree == 2);

  const StructuralPredicates p4 = structural_predicates(family(Family::kPath, 4));
  CHECK_FALSE(p4.every_edge_touches_min_degree);
  CHECK(p4.every_edge_touches_max_degree);
  CHECK_FALSE(p4.every_edge_equal_degrees);

  const StructuralPredicates empty = structural_predicates(make(3, {}));
  CHECK(empty.is_regular);
  CHECK(empty.every_edge_touches_min_degree);
  CHECK(empty.every_edge_touches_max_degree);
}

TEST_CASE("family recognisers") {
  CHECK(is_path_graph(family(Family::kPath, 5)));
  CHECK(is_path_graph(make(4, {{2, 0}, {0, 3}, {3, 1}})));
  CHECK_FALSE(is_path_graph(family(Family::kStar, 4)));
  CHECK(is_cycle_graph(make(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}})));
  CHECK_FALSE(is_cycle_graph(disjoint_union(family(Family::kCycle, 3), family(Family::kCycle, 3))));
  CHECK(is_star_graph(make(4, {{3, 0}, {3, 1}, {3, 2}})));
  CHECK(is_star_graph(family(Family::kStar, 2)));
  CHECK_FALSE(is_star_graph(family(Family::kPath, 4)));
  CHECK(is_complete_graph(family(Family::kComplete, 5)));
  CHECK(is_complete_graph(make(1, {})));
  CHECK(is_tree(family(Family::kStar, 7)));
  CHECK_FALSE(is_tree(make(4, {{0, 1}, {1, 2}})));
}

TEST_CASE("add_edge_copy") {
  const Graph two_k2 = make(4, {{0, 1}, {2, 3}});
  const Graph joined = add_edge_copy(two_k2, 1, 2);
  CHECK(is_path_graph(joined));
  CHECK(two_k2.size() == 2);
  CHECK(add_edge_copy(family(Family::kPath, 3), 0, 2) == family(Family::kComplete, 3));
  CHECK(error_of([] { add_edge_copy(family(Family::kComplete, 3), 0, 1); }) == GraphErrc::kAlreadyAdjacent);
  CHECK(error_of([] { add_edge_copy(family(Family::kPath, 3), 1, 1); }) == GraphErrc::kSelfLoop);
}

TEST_CASE("add_edge_copy raises m by one and two degrees by one") {
  enumerate(EnumerationPlan::internal(GraphClassSpec::connected(5)), [](const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
      for (int v = u + 1; v < g.order(); ++v) {
        if (g.adjacent(u, v)) continue;
        const Graph h = add_edge_copy(g, u, v);
        REQUIRE(h.size() == g.size() + 1);
        int changed = 0;
        for (int w = 0; w < g.order(); ++w) {
          const int d = h.degree(w) - g.degree(w);
          REQUIRE((d == 0 || d == 1));
          changed += d;
        }
        REQUIRE(changed == 2);
        REQUIRE(h.degree(u) == g.degree(u) + 1);
      }
    }
  });
}

TEST_CASE("degree sum is twice the size") {
  for (int n = 1; n <= 5; ++n) {
    oracle::for_each_labeled(n, [&](const oracle::Matrix& m) {
      std::vector<Edge> edges = m.edges();
      const Graph g = build_graph(n, edges);
      const auto d = g.degrees();
      REQUIRE(std::accumulate(d.begin(), d.end(), 0) == 2 * g.size());
      REQUIRE(g.edges() == edges);
      REQUIRE(is_connected(g) == oracle::connected(m));
    });
  }
}

TEST_CASE("canonical code examples") {
  const Graph p3a = make(3, {{0, 1}, {1, 2}});
  const Graph p3b = make(3, {{1, 0}, {0, 2}});
  CHECK(canonical_code(p3a) == canonical_code(p3b));
  CHECK(canonical_code(family(Family::kPath, 4)) != canonical_code(family(Family::kStar, 4)));

  // Every labelling of the triangle with a pendant vertex.
  std::set<std::vector<std::uint8_t>> codes;
  std::vector<Vertex> perm = {0, 1, 2, 3};
  const Graph paw = make(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  int labellings = 0;
  do {
    codes.insert(canonical_code(paw.relabeled(perm)));
    ++labellings;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(labellings == 24);
  CHECK(codes.size() == 1);

  CHECK_THROWS_AS(canonical_code(make(10, {})), GraphError);
  CHECK_NOTHROW(canonical_code(make(10, {}), 10));
}

TEST_CASE("canonical code is invariant under random relabelling") {
  std::mt19937 rng(20240611);
  for (int n = 1; n <= 7; ++n) {
    const auto graphs = enumerate_all(EnumerationPlan::internal(GraphClassSpec::connected(n)));
    for (std::size_t k = 0; k < graphs.size(); k += std::max<std::size_t>(1, graphs.size() / 400)) {
      const Graph& g = graphs[k];
      const auto code = canonical_code(g);
      for (int rep = 0; rep < 4; ++rep) REQUIRE(canonical_code(random_relabel(g, rng)) == code);
      const Graph form = canonical_form(g);
      REQUIRE(canonical_code(form) == code);
      REQUIRE(canonical_form(form) == form);
    }
  }
}

TEST_CASE("canonical code separates exactly the brute-force classes") {
  // Brute force over all n! orders is the oracle.
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<bool>> brute;
    std::set<std::vector<std::uint8_t>> ours;
    oracle::for_each_labeled(n, [&](const oracle::Matrix& m) {
      std::vector<Edge> edges = m.edges();
      brute.insert(oracle::brute_canonical(m));
      ours.insert(canonical_code(build_graph(n, edges)));
    });
    CHECK(ours.size() == brute.size());
  }
}

TEST_CASE("disjoint union shifts the second operand") {
  const Graph u = disjoint_union(family(Family::kComplete, 2), family(Family::kPath, 3));
  CHECK(u.order() == 5);
  CHECK(u.edges() == std::vector<Edge>{{0, 1}, {2, 3}, {3, 4}});
}

TEST_CASE("graph class spec") {
  CHECK(GraphClassSpec::trees(6).required_size() == 5);
  CHECK(GraphClassSpec::with_cyclomatic(5, 2).required_size() == 6);
  CHECK(GraphClassSpec::connected(5).required_size() == -1);
  CHECK(GraphClassSpec::trees(4).admits(family(Family::kStar, 4)));
  CHECK_FALSE(GraphClassSpec::trees(4).admits(family(Family::kCycle, 4)));
  CHECK(GraphClassSpec::with_cyclomatic(4, 1).admits(family(Family::kCycle, 4)));
  CHECK_FALSE(GraphClassSpec::connected(4).admits(make(4, {{0, 1}, {2, 3}})));
}
