#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "hsolab/graph.hpp"

namespace hsolab {

/// Bond-incident-degree indices: sums over edges of a symmetric function of
/// the two endpoint degrees.
enum class IndexKind { kSO, kDSO, kHSO, kCDSO, kM1 };

inline constexpr std::array<IndexKind, 5> kAllIndices = {IndexKind::kSO, IndexKind::kDSO, IndexKind::kHSO,
                                                         IndexKind::kCDSO, IndexKind::kM1};

std::string_view to_string(IndexKind kind);
std::optional<IndexKind> parse_index_kind(std::string_view name);

// Unchecked edge weight; x, y >= 1.
inline double edge_weight(IndexKind kind, int x, int y) noexcept {
  const double a = x;
  const double b = y;
  switch (kind) {
    case IndexKind::kSO: return std::hypot(a, b);
    case IndexKind::kDSO: return std::hypot(a, b) / (a + b);
    case IndexKind::kHSO: return std::hypot(a, b) / std::min(a, b);
    case IndexKind::kCDSO: return std::hypot(a, b) / std::max(a, b);
    case IndexKind::kM1: return a + b;
  }
  return 0.0;
}

/// Edge contribution h(x, y). Throws std::domain_error for a degree below 1.
double edge_contribution(IndexKind kind, int x, int y);

/// Sum of edge contributions; 0 on edgeless graphs.
double index_value(const Graph& g, IndexKind kind);

/// Closed form on a named family. Throws GraphError when n is below the
/// formula's range (the path formula needs n >= 3).
double closed_form(IndexKind kind, Family family, int n);

}  // namespace hsolab
