#include "hsolab/indices.hpp"

#include <string>

namespace hsolab {

std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::kSO: return "so";
    case IndexKind::kDSO: return "dso";
    case IndexKind::kHSO: return "hso";
    case IndexKind::kCDSO: return "cdso";
    case IndexKind::kM1: return "m1";
  }
  return "unknown";
}

std::optional<IndexKind> parse_index_kind(std::string_view name) {
  for (const IndexKind kind : kAllIndices) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

double edge_contribution(IndexKind kind, int x, int y) {
  if (x < 1 || y < 1) {
    throw std::domain_error("edge contribution needs degrees >= 1, got (" + std::to_string(x) + "," +
                            std::to_string(y) + ")");
  }
  return edge_weight(kind, x, y);
}

double index_value(const Graph& g, IndexKind kind) {
  double total = 0.0;
  g.for_each_edge([&](int u, int v) { total += edge_weight(kind, g.degree(u), g.degree(v)); });
  return total;
}

double closed_form(IndexKind kind, Family family, int n) {
  const double sqrt2 = std::sqrt(2.0);
  const double sqrt5 = std::sqrt(5.0);
  const double nd = n;
  auto require = [&](int minimum) {
    if (n < minimum) {
      throw GraphError(GraphErrc::kFamilyOrderTooSmall,
                       std::string("closed form for ") + to_string(family) + " needs n >= " +
                           std::to_string(minimum));
    }
  };

  switch (family) {
    case Family::kPath: {
      // Two (1,2) end edges and n-3 inner (2,2) edges.
      require(3);
      const double inner = nd - 3.0;
      switch (kind) {
        case IndexKind::kSO: return 2.0 * sqrt5 + inner * 2.0 * sqrt2;
        case IndexKind::kDSO: return 2.0 * sqrt5 / 3.0 + inner * sqrt2 / 2.0;
        case IndexKind::kHSO: return 2.0 * sqrt5 + inner * sqrt2;
        case IndexKind::kCDSO: return sqrt5 + inner * sqrt2;
        case IndexKind::kM1: return 4.0 * nd - 6.0;
      }
      break;
    }
    case Family::kCycle: {
      require(3);
      switch (kind) {
        case IndexKind::kSO: return 2.0 * sqrt2 * nd;
        case IndexKind::kDSO: return nd * sqrt2 / 2.0;
        case IndexKind::kHSO: return nd * sqrt2;
        case IndexKind::kCDSO: return nd * sqrt2;
        case IndexKind::kM1: return 4.0 * nd;
      }
      break;
    }
    case Family::kStar: {
      require(2);
      const double leaves = nd - 1.0;
      const double spoke = std::sqrt(leaves * leaves + 1.0);
      switch (kind) {
        case IndexKind::kSO: return leaves * spoke;
        case IndexKind::kDSO: return leaves * spoke / nd;
        case IndexKind::kHSO: return leaves * spoke;
        case IndexKind::kCDSO: return spoke;
        case IndexKind::kM1: return leaves * nd;
      }
      break;
    }
    case Family::kComplete: {
      require(2);
      const double pairs = nd * (nd - 1.0) / 2.0;
      switch (kind) {
        case IndexKind::kSO: return pairs * sqrt2 * (nd - 1.0);
        case IndexKind::kDSO: return pairs / sqrt2;
        case IndexKind::kHSO: return pairs * sqrt2;
        case IndexKind::kCDSO: return nd * (nd - 1.0) / sqrt2;
        case IndexKind::kM1: return nd * (nd - 1.0) * (nd - 1.0);
      }
      break;
    }
  }
  return 0.0;
}

}  // namespace hsolab
