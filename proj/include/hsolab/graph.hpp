#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hsolab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Adjacency is one 64-bit word per vertex.
inline constexpr int kMaxOrder = 64;
inline constexpr int kCanonicalLimit = 9;

enum class GraphErrc {
  kEmptyOrder,
  kOrderTooLarge,
  kEndpointOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kAlreadyAdjacent,
  kAsymmetricAdjacency,
  kFamilyOrderTooSmall,
  kCanonicalLimitExceeded,
};

const char* to_string(GraphErrc code);

class GraphError : public std::invalid_argument {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

enum class Family { kPath, kCycle, kStar, kComplete };

const char* to_string(Family family);

/// Simple undirected graph on vertices 0..n-1. Read-only after
/// construction; every "mutation" returns a new value.
class Graph {
 public:
  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Builds from per-vertex adjacency words. Symmetry and the absence of
  /// loops are checked.
  static Graph from_adjacency(std::vector<std::uint64_t> adjacency);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  int size() const noexcept { return size_; }
  int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
  std::span<const int> degrees() const noexcept { return degree_; }
  std::uint64_t neighbours(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::span<const std::uint64_t> adjacency() const noexcept { return adj_; }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Calls fn(u, v) for each edge, u < v, lexicographic order.
  template <class Fn>
  void for_each_edge(Fn&& fn) const {
    for (int u = 0; u < order(); ++u) {
      std::uint64_t above = adj_[static_cast<std::size_t>(u)] & upper_mask(u);
      while (above != 0) {
        const int v = __builtin_ctzll(above);
        above &= above - 1;
        fn(u, v);
      }
    }
  }

  int min_degree() const noexcept { return min_degree_; }
  int max_degree() const noexcept { return max_degree_; }

  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  explicit Graph(std::vector<std::uint64_t> adjacency);

  static std::uint64_t upper_mask(int u) {
    return u >= 63 ? 0 : ~((std::uint64_t{2} << u) - 1);
  }

  std::vector<std::uint64_t> adj_;
  std::vector<int> degree_;
  int size_ = 0;
  int min_degree_ = 0;
  int max_degree_ = 0;
};

Graph build_graph(int n, std::span<const Edge> edges);
Graph family(Family kind, int n);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);
int component_count(const Graph& g);
int cyclomatic_number(const Graph& g);

struct StructuralPredicates {
  bool is_regular = false;
  bool has_dominating_vertex = false;
  int min_degree = 0;
  int max_degree = 0;
  // Vacuously true on edgeless graphs.
  bool every_edge_touches_min_degree = true;
  bool every_edge_touches_max_degree = true;
  // Vacuously true on edgeless graphs.
  bool every_edge_equal_degrees = true;
};

StructuralPredicates structural_predicates(const Graph& g);

bool is_tree(const Graph& g);
// Isomorphism tests against the named families, decided from degree data.
bool is_path_graph(const Graph& g);
bool is_cycle_graph(const Graph& g);
bool is_star_graph(const Graph& g);
bool is_complete_graph(const Graph& g);

Graph add_edge_copy(const Graph& g, Vertex u, Vertex v);

/// Isomorphism-invariant byte code: minimal adjacency encoding over all
/// vertex orders compatible with an equitable colour refinement.
std::vector<std::uint8_t> canonical_code(const Graph& g, int limit = kCanonicalLimit);

/// Graph whose labelling realises canonical_code(g).
Graph canonical_form(const Graph& g, int limit = kCanonicalLimit);

// Classes of connected graphs used by enumeration and search.
struct GraphClassSpec {
  enum class Constraint { kConnected, kTrees, kCyclomatic };

  int order = 1;
  Constraint constraint = Constraint::kConnected;
  int cyclomatic = 0;  // only for kCyclomatic

  static GraphClassSpec connected(int n) { return {n, Constraint::kConnected, 0}; }
  static GraphClassSpec trees(int n) { return {n, Constraint::kTrees, 0}; }
  static GraphClassSpec with_cyclomatic(int n, int ell) { return {n, Constraint::kCyclomatic, ell}; }

  /// Required edge count, or -1 when unconstrained.
  int required_size() const;
  bool admits(const Graph& g) const;
  std::string describe() const;
};

}  // namespace hsolab
