#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hsolab/enumeration.hpp"
#include "hsolab/indices.hpp"

namespace hsolab {

enum class Direction { kMin, kMax };

std::string_view to_string(Direction direction);

inline constexpr double kWitnessTolerance = 1e-9;
// A non-attaining value this close to the optimum is flagged in the result.
inline constexpr double kNearTieWarning = 1e-6;

struct WitnessProperties {
  bool has_dominating_vertex = false;
  int min_degree = 0;
  int max_degree = 0;
  bool degrees_in_2_3 = false;  // both extreme degrees lie in {2, 3}
};

WitnessProperties witness_properties(const Graph& g);

struct ExtremalResult {
  GraphClassSpec graph_class;
  IndexKind kind = IndexKind::kHSO;
  Direction direction = Direction::kMin;
  double optimum = 0.0;
  long long examined = 0;
  /// Canonically labelled, pairwise non-isomorphic, sorted by canonical code.
  std::vector<Graph> witnesses;
  std::vector<WitnessProperties> properties;
  /// Closest value to the optimum that is not within tolerance of it.
  std::optional<double> nearest_other;
  bool near_tie_warning = false;
};

/// Throws EnumerationError for an empty class or an invalid plan.
ExtremalResult find_extremal(const EnumerationPlan& plan, IndexKind kind, Direction direction, int workers = 1,
                             double tol = kWitnessTolerance);

struct ConjectureReport {
  int order = 0;
  int cyclomatic = 0;
  ExtremalResult cdso_min;
  ExtremalResult hso_max;
  ExtremalResult cdso_max;
  ExtremalResult hso_min;
  bool cdso_min_dominating = false;
  bool hso_max_dominating = false;
  bool dominating_vertex_all_witnesses = false;
  /// Degree conjecture is stated for cyclomatic number >= 2 only.
  bool degree_conjecture_applicable = false;
  bool cdso_max_degrees_in_2_3 = false;
  bool hso_min_degrees_in_2_3 = false;
};

/// Searches connected graphs of order n and cyclomatic number ell. Requires
/// 4 <= n <= internal cap and ell >= 1; a class with no graphs throws
/// EnumerationError.
ConjectureReport conjecture_report(int n, int ell, int workers = 1);

}  // namespace hsolab
