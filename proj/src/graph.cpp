#include "hsolab/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace hsolab {

const char* to_string(GraphErrc code) {
  switch (code) {
    case GraphErrc::kEmptyOrder: return "empty-order";
    case GraphErrc::kOrderTooLarge: return "order-too-large";
    case GraphErrc::kEndpointOutOfRange: return "endpoint-out-of-range";
    case GraphErrc::kSelfLoop: return "self-loop";
    case GraphErrc::kDuplicateEdge: return "duplicate-edge";
    case GraphErrc::kAlreadyAdjacent: return "already-adjacent";
    case GraphErrc::kAsymmetricAdjacency: return "asymmetric-adjacency";
    case GraphErrc::kFamilyOrderTooSmall: return "family-order-too-small";
    case GraphErrc::kCanonicalLimitExceeded: return "canonical-limit-exceeded";
  }
  return "unknown";
}

const char* to_string(Family family) {
  switch (family) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kStar: return "star";
    case Family::kComplete: return "complete";
  }
  return "unknown";
}

namespace {

void check_order(int n) {
  if (n < 1) throw GraphError(GraphErrc::kEmptyOrder, "graph order must be at least 1");
  if (n > kMaxOrder) {
    throw GraphError(GraphErrc::kOrderTooLarge,
                     "graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
}

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

Graph::Graph(std::vector<std::uint64_t> adjacency)
    : adj_(std::move(adjacency)), degree_(adj_.size(), 0) {
  int twice_m = 0;
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    degree_[v] = std::popcount(adj_[v]);
    twice_m += degree_[v];
  }
  size_ = twice_m / 2;
  const auto [lo, hi] = std::minmax_element(degree_.begin(), degree_.end());
  min_degree_ = *lo;
  max_degree_ = *hi;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError(GraphErrc::kEndpointOutOfRange,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw GraphError(GraphErrc::kSelfLoop, "self-loop at vertex " + std::to_string(u));
    }
    auto& row = adj[static_cast<std::size_t>(u)];
    if ((row & bit(v)) != 0) {
      throw GraphError(GraphErrc::kDuplicateEdge, "duplicate edge (" + std::to_string(u) + "," +
                                                      std::to_string(v) + ")");
    }
    row |= bit(v);
    adj[static_cast<std::size_t>(v)] |= bit(u);
  }
  return Graph(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<std::uint64_t> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  check_order(n);
  const std::uint64_t valid = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  for (int u = 0; u < n; ++u) {
    const std::uint64_t row = adjacency[static_cast<std::size_t>(u)];
    if ((row & ~valid) != 0) {
      throw GraphError(GraphErrc::kEndpointOutOfRange,
                       "adjacency row " + std::to_string(u) + " references a vertex >= n");
    }
    if ((row & bit(u)) != 0) {
      throw GraphError(GraphErrc::kSelfLoop, "self-loop at vertex " + std::to_string(u));
    }
    for (std::uint64_t rest = row; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((adjacency[static_cast<std::size_t>(v)] & bit(u)) == 0) {
        throw GraphError(GraphErrc::kAsymmetricAdjacency, "adjacency is not symmetric");
      }
    }
  }
  return Graph(std::move(adjacency));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(size_));
  for_each_edge([&](int u, int v) { out.emplace_back(u, v); });
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  // perm[old] = new
  std::vector<std::uint64_t> adj(adj_.size(), 0);
  for_each_edge([&](int u, int v) {
    const int a = perm[static_cast<std::size_t>(u)];
    const int b = perm[static_cast<std::size_t>(v)];
    adj[static_cast<std::size_t>(a)] |= bit(b);
    adj[static_cast<std::size_t>(b)] |= bit(a);
  });
  return Graph(std::move(adj));
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

Graph family(Family kind, int n) {
  auto too_small = [&](int minimum) {
    if (n < minimum) {
      throw GraphError(GraphErrc::kFamilyOrderTooSmall,
                       std::string(to_string(kind)) + " requires n >= " + std::to_string(minimum));
    }
  };
  std::vector<Edge> edges;
  switch (kind) {
    case Family::kPath:
      too_small(1);
      for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case Family::kCycle:
      too_small(3);
      for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(0, n - 1);
      break;
    case Family::kStar:
      too_small(2);
      for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case Family::kComplete:
      too_small(1);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
  }
  return Graph::from_edges(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  check_order(shift + b.order());
  std::vector<std::uint64_t> adj(a.adjacency().begin(), a.adjacency().end());
  for (const std::uint64_t row : b.adjacency()) adj.push_back(row << shift);
  return Graph::from_adjacency(std::move(adj));
}

namespace {

std::uint64_t component_of(const Graph& g, int start) {
  std::uint64_t seen = bit(start);
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= g.neighbours(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

int component_count(const Graph& g) {
  const int n = g.order();
  std::uint64_t remaining = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  int count = 0;
  while (remaining != 0) {
    remaining &= ~component_of(g, std::countr_zero(remaining));
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

int cyclomatic_number(const Graph& g) { return g.size() - g.order() + component_count(g); }

StructuralPredicates structural_predicates(const Graph& g) {
  StructuralPredicates p;
  p.min_degree = g.min_degree();
  p.max_degree = g.max_degree();
  p.is_regular = p.min_degree == p.max_degree;
  p.has_dominating_vertex = p.max_degree == g.order() - 1;
  g.for_each_edge([&](int u, int v) {
    const int du = g.degree(u);
    const int dv = g.degree(v);
    if (du != p.min_degree && dv != p.min_degree) p.every_edge_touches_min_degree = false;
    if (du != p.max_degree && dv != p.max_degree) p.every_edge_touches_max_degree = false;
    if (du != dv) p.every_edge_equal_degrees = false;
  });
  return p;
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

bool is_path_graph(const Graph& g) {
  if (g.order() == 1) return true;
  return is_tree(g) && g.max_degree() <= 2;
}

bool is_cycle_graph(const Graph& g) {
  return g.order() >= 3 && g.min_degree() == 2 && g.max_degree() == 2 && is_connected(g);
}

bool is_star_graph(const Graph& g) {
  // S_n for n >= 2: n - 1 edges all at one vertex.
  return g.order() >= 2 && g.size() == g.order() - 1 && g.max_degree() == g.order() - 1;
}

bool is_complete_graph(const Graph& g) {
  return g.size() == g.order() * (g.order() - 1) / 2;
}

Graph add_edge_copy(const Graph& g, Vertex u, Vertex v) {
  const int n = g.order();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw GraphError(GraphErrc::kEndpointOutOfRange, "vertex outside 0.." + std::to_string(n - 1));
  }
  if (u == v) throw GraphError(GraphErrc::kSelfLoop, "cannot join a vertex to itself");
  if (g.adjacent(u, v)) {
    throw GraphError(GraphErrc::kAlreadyAdjacent, "vertices " + std::to_string(u) + " and " +
                                                      std::to_string(v) + " are already adjacent");
  }
  std::vector<std::uint64_t> adj(g.adjacency().begin(), g.adjacency().end());
  adj[static_cast<std::size_t>(u)] |= bit(v);
  adj[static_cast<std::size_t>(v)] |= bit(u);
  return Graph::from_adjacency(std::move(adj));
}

namespace {

// Equitable colour refinement starting from degrees. Colour ids are ranks of
// sorted signatures, so they do not depend on the labelling.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  const std::size_t width = static_cast<std::size_t>(n) + 1;
  std::vector<int> colour(g.degrees().begin(), g.degrees().end());
  // Signature of v: its colour, then how many neighbours carry each colour.
  std::vector<int> sig(width * static_cast<std::size_t>(n));
  std::vector<int> order(static_cast<std::size_t>(n));
  int classes = -1;
  while (true) {
    std::fill(sig.begin(), sig.end(), 0);
    for (int v = 0; v < n; ++v) {
      int* row = sig.data() + width * static_cast<std::size_t>(v);
      row[0] = colour[static_cast<std::size_t>(v)];
      for (std::uint64_t nb = g.neighbours(v); nb != 0; nb &= nb - 1)
        ++row[1 + colour[static_cast<std::size_t>(std::countr_zero(nb))]];
    }
    const auto row_of = [&](int v) { return sig.begin() + static_cast<std::ptrdiff_t>(width * static_cast<std::size_t>(v)); };
    const auto less = [&](int a, int b) {
      return std::lexicographical_compare(row_of(a), row_of(a) + static_cast<std::ptrdiff_t>(width), row_of(b),
                                          row_of(b) + static_cast<std::ptrdiff_t>(width));
    };
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), less);
    int next = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && less(order[static_cast<std::size_t>(i - 1)], order[static_cast<std::size_t>(i)])) ++next;
      colour[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = next;
    }
    ++next;
    if (n == 0 || next == classes) return colour;
    classes = next;
  }
}

struct CanonicalSearch {
  const Graph& g;
  int n;
  std::vector<int> cell_of_position;  // colour required at each position
  std::vector<int> colour;
  std::vector<int> perm;              // perm[position] = vertex
  std::vector<std::uint64_t> best_rows;
  std::vector<int> best_perm;
  std::uint64_t used = 0;

  // Row k holds adjacency of position k to positions 0..k-1, position 0 in
  // the most significant place, so integer order equals lexicographic order.
  std::uint64_t row(int k) const {
    std::uint64_t r = 0;
    const std::uint64_t nb = g.neighbours(perm[static_cast<std::size_t>(k)]);
    for (int i = 0; i < k; ++i) {
      r = (r << 1) | ((nb >> perm[static_cast<std::size_t>(i)]) & 1U);
    }
    return r;
  }

  void search(int k) {
    if (k == n) {
      best_perm = perm;
      return;
    }
    const int want = cell_of_position[static_cast<std::size_t>(k)];
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1U) continue;
      if (colour[static_cast<std::size_t>(v)] != want) continue;
      perm[static_cast<std::size_t>(k)] = v;
      const std::uint64_t r = row(k);
      auto& best = best_rows[static_cast<std::size_t>(k)];
      if (r > best) continue;
      if (r < best) {
        best = r;
        std::fill(best_rows.begin() + k + 1, best_rows.end(), std::numeric_limits<std::uint64_t>::max());
      }
      used |= bit(v);
      search(k + 1);
      used &= ~bit(v);
    }
  }
};

std::vector<int> canonical_order(const Graph& g, int limit) {
  const int n = g.order();
  if (n > limit) {
    throw GraphError(GraphErrc::kCanonicalLimitExceeded,
                     "canonical form limited to n <= " + std::to_string(limit));
  }
  CanonicalSearch s{g, n, {}, refine_colours(g), std::vector<int>(static_cast<std::size_t>(n)),
                    std::vector<std::uint64_t>(static_cast<std::size_t>(n),
                                               std::numeric_limits<std::uint64_t>::max()),
                    {}};
  s.cell_of_position = s.colour;
  std::sort(s.cell_of_position.begin(), s.cell_of_position.end());
  s.search(0);
  return s.best_perm;
}

}  // namespace

std::vector<std::uint8_t> canonical_code(const Graph& g, int limit) {
  const std::vector<int> order = canonical_order(g, limit);
  const int n = g.order();
  std::vector<std::uint8_t> code{static_cast<std::uint8_t>(n)};
  int filled = 8;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (filled == 8) {
        code.push_back(0);
        filled = 0;
      }
      if (g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))
        code.back() |= static_cast<std::uint8_t>(0x80U >> filled);
      ++filled;
    }
  }
  return code;
}

Graph canonical_form(const Graph& g, int limit) {
  const std::vector<int> order = canonical_order(g, limit);
  std::vector<Vertex> perm(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) perm[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
  return g.relabeled(perm);
}

int GraphClassSpec::required_size() const {
  switch (constraint) {
    case Constraint::kConnected: return -1;
    case Constraint::kTrees: return order - 1;
    case Constraint::kCyclomatic: return order - 1 + cyclomatic;
  }
  return -1;
}

bool GraphClassSpec::admits(const Graph& g) const {
  if (g.order() != order) return false;
  const int m = required_size();
  if (m >= 0 && g.size() != m) return false;
  return is_connected(g);
}

std::string GraphClassSpec::describe() const {
  switch (constraint) {
    case Constraint::kConnected: return "connected";
    case Constraint::kTrees: return "trees";
    case Constraint::kCyclomatic: return "cyclomatic=" + std::to_string(cyclomatic);
  }
  return "unknown";
}

}  // namespace hsolab
