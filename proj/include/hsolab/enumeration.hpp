#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsolab/graph.hpp"

namespace hsolab {

inline constexpr int kInternalEnumerationCap = 8;
inline constexpr int kDedupCap = kCanonicalLimit;

class EnumerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EnumerationPlan {
  GraphClassSpec graph_class;
  /// Emit one canonical representative per isomorphism class, in canonical
  /// code order.
  bool dedup = false;
  /// When set, graphs come from this list (typically a parsed graph6
  /// stream) instead of internal generation.
  std::shared_ptr<const std::vector<Graph>> external;

  static EnumerationPlan internal(GraphClassSpec cls, bool dedup = false) { return {cls, dedup, nullptr}; }
  static EnumerationPlan from_stream(GraphClassSpec cls, std::istream& graph6, bool dedup = false);

  /// Throws EnumerationError when the plan exceeds a cap or the class is
  /// malformed.
  void validate() const;
};

using GraphVisitor = std::function<void(const Graph&)>;
/// Called concurrently from worker threads; the first argument is the
/// worker id in 0..workers-1.
using WorkerVisitor = std::function<void(int, const Graph&)>;

/// Labeled mode visits graphs in increasing upper-triangle bitmask order
/// (bit j(j-1)/2 + i stands for the pair i < j).
void enumerate(const EnumerationPlan& plan, const GraphVisitor& visit);

/// The mask space is split into prefix blocks assigned round-robin to
/// workers. In dedup mode per-worker representatives are merged and then
/// visited from worker 0 in canonical order.
void enumerate_parallel(const EnumerationPlan& plan, int workers, const WorkerVisitor& visit);

std::vector<Graph> enumerate_all(const EnumerationPlan& plan, int workers = 1);

/// Number of graphs enumerate(plan) would visit.
long long count(const EnumerationPlan& plan, int workers = 1);

}  // namespace hsolab
