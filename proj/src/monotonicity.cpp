#include "hsolab/monotonicity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "hsolab/indices.hpp"

namespace hsolab {

namespace {

struct NeighbourDegrees {
  int min = std::numeric_limits<int>::max();
  int max = 0;
};

NeighbourDegrees neighbour_degrees(const Graph& g, Vertex v) {
  NeighbourDegrees out;
  for (std::uint64_t nb = g.neighbours(v); nb != 0; nb &= nb - 1) {
    const int d = g.degree(std::countr_zero(nb));
    out.min = std::min(out.min, d);
    out.max = std::max(out.max, d);
  }
  return out;
}

bool uniform_neighbourhood(const Graph& g, Vertex v, int degree) {
  const NeighbourDegrees nd = neighbour_degrees(g, v);
  return g.degree(v) >= 1 && nd.min == degree && nd.max == degree;
}

bool decrease_oriented(const Graph& g, Vertex big, Vertex small, int min_small_degree) {
  const int db = g.degree(big);
  const int ds = g.degree(small);
  return ds >= min_small_degree && db == 4 * ds && uniform_neighbourhood(g, big, db) &&
         uniform_neighbourhood(g, small, ds);
}

}  // namespace

bool hso_decrease_condition(const Graph& g, Vertex u, Vertex v) {
  const int delta = g.min_degree();
  if (delta < 1 || g.degree(u) != delta || g.degree(v) != delta) return false;
  return neighbour_degrees(g, u).min > delta && neighbour_degrees(g, v).min > delta;
}

bool hso_increase_condition(const Graph& g, Vertex u, Vertex v) {
  if (g.min_degree() < 1) return false;
  return g.degree(u) >= neighbour_degrees(g, u).max && g.degree(v) >= neighbour_degrees(g, v).max;
}

bool cdso_decrease_condition(const Graph& g, Vertex u, Vertex v) {
  // d(a) = 4 d(b) >= 12 is d(b) >= 3.
  return decrease_oriented(g, u, v, 3) || decrease_oriented(g, v, u, 3);
}

bool cdso_decrease_condition_relaxed(const Graph& g, Vertex u, Vertex v, int min_small_degree) {
  return decrease_oriented(g, u, v, min_small_degree) || decrease_oriented(g, v, u, min_small_degree);
}

bool cdso_increase_condition(const Graph& g, Vertex u, Vertex v) {
  if (g.min_degree() < 1) return false;
  return g.degree(u) + 1 <= neighbour_degrees(g, u).min && g.degree(v) + 1 <= neighbour_degrees(g, v).min;
}

bool MonotonicityReport::consistent(double tol) const {
  if (hso_decrease_condition && !(delta_hso < -tol)) return false;
  if (hso_increase_condition && !(delta_hso > tol)) return false;
  if (cdso_decrease_condition && !(delta_cdso < -tol)) return false;
  if (cdso_increase_condition && !(delta_cdso > tol)) return false;
  return true;
}

MonotonicityReport classify_pair(const Graph& g, Vertex u, Vertex v) {
  const Graph joined = add_edge_copy(g, u, v);  // validates the pair
  MonotonicityReport r;
  r.u = u;
  r.v = v;
  r.hso_decrease_condition = hso_decrease_condition(g, u, v);
  r.hso_increase_condition = hso_increase_condition(g, u, v);
  r.cdso_decrease_condition = cdso_decrease_condition(g, u, v);
  r.cdso_increase_condition = cdso_increase_condition(g, u, v);
  r.delta_hso = index_value(joined, IndexKind::kHSO) - index_value(g, IndexKind::kHSO);
  r.delta_cdso = index_value(joined, IndexKind::kCDSO) - index_value(g, IndexKind::kCDSO);
  return r;
}

std::vector<MonotonicityReport> scan_graph(const Graph& g) {
  std::vector<MonotonicityReport> out;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) == 0) continue;
    for (int v = u + 1; v < n; ++v) {
      if (g.degree(v) == 0 || g.adjacent(u, v)) continue;
      out.push_back(classify_pair(g, u, v));
    }
  }
  return out;
}

}  // namespace hsolab
