#pragma once

#include <vector>

#include "hsolab/graph.hpp"

namespace hsolab {

/// Effect of adding the edge uv to a graph, with the four sufficient
/// conditions that predict its sign.
struct MonotonicityReport {
  Vertex u = 0;
  Vertex v = 0;
  // d(u) = d(v) = delta(G) >= 1 and every neighbour of u and of v has degree > delta(G).
  bool hso_decrease_condition = false;
  // delta(G) >= 1, d(u) >= max neighbour degree of u, same for v.
  bool hso_increase_condition = false;
  // In one orientation: d(a) = 4 d(b) >= 12, all neighbours of a have degree
  // d(a), all neighbours of b have degree d(b).
  bool cdso_decrease_condition = false;
  // delta(G) >= 1, d(u) + 1 <= min neighbour degree of u, same for v.
  bool cdso_increase_condition = false;
  double delta_hso = 0.0;   // HSO(G + uv) - HSO(G)
  double delta_cdso = 0.0;  // CDSO(G + uv) - CDSO(G)

  /// Every satisfied condition has the strict sign it promises, with
  /// |delta| > tol.
  bool consistent(double tol = 1e-9) const;
  bool any_condition() const {
    return hso_decrease_condition || hso_increase_condition || cdso_decrease_condition || cdso_increase_condition;
  }
};

bool hso_decrease_condition(const Graph& g, Vertex u, Vertex v);
bool hso_increase_condition(const Graph& g, Vertex u, Vertex v);
bool cdso_decrease_condition(const Graph& g, Vertex u, Vertex v);
bool cdso_increase_condition(const Graph& g, Vertex u, Vertex v);

/// The CDSO decrease condition with the d(a) >= 12 threshold replaced by
/// d(b) >= min_small_degree. Diagnostic only.
bool cdso_decrease_condition_relaxed(const Graph& g, Vertex u, Vertex v, int min_small_degree);

/// Throws GraphError when u == v or uv is already an edge.
MonotonicityReport classify_pair(const Graph& g, Vertex u, Vertex v);

/// One report per non-adjacent pair u < v with both degrees >= 1, in
/// lexicographic order.
std::vector<MonotonicityReport> scan_graph(const Graph& g);

}  // namespace hsolab
