#include "hsolab/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace hsolab {

std::string_view to_string(BoundId id) {
  switch (id) {
    case BoundId::kHsoGeSqrt2M: return "HSO_GE_SQRT2M";
    case BoundId::kHsoSoSandwich: return "HSO_SO_SANDWICH";
    case BoundId::kHsoGeM1: return "HSO_GE_M1";
    case BoundId::kHsoOrderSizeLower: return "HSO_ORDER_SIZE_LOWER";
    case BoundId::kHsoCycleStar: return "HSO_CYCLE_STAR";
    case BoundId::kCdsoLeSqrt2M: return "CDSO_LE_SQRT2M";
    case BoundId::kCdsoGeStarform: return "CDSO_GE_STARFORM";
    case BoundId::kCdsoConnectedRange: return "CDSO_CONNECTED_RANGE";
    case BoundId::kCdsoSoSandwich: return "CDSO_SO_SANDWICH";
    case BoundId::kCdsoGeM1: return "CDSO_GE_M1";
    case BoundId::kCdsoOrderSizeUpper: return "CDSO_ORDER_SIZE_UPPER";
    case BoundId::kCdsoTreeRange: return "CDSO_TREE_RANGE";
    case BoundId::kCdsoLeHso: return "CDSO_LE_HSO";
  }
  return "UNKNOWN";
}

std::optional<BoundId> parse_bound_id(std::string_view name) {
  for (const BoundId id : kAllBounds) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

IndexKind bound_index(BoundId id) {
  switch (id) {
    case BoundId::kHsoGeSqrt2M:
    case BoundId::kHsoSoSandwich:
    case BoundId::kHsoGeM1:
    case BoundId::kHsoOrderSizeLower:
    case BoundId::kHsoCycleStar:
      return IndexKind::kHSO;
    default:
      return IndexKind::kCDSO;
  }
}

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt5 = std::sqrt(5.0);

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

}  // namespace

namespace {

// Everything the bounds read from a graph, computed once.
struct BoundContext {
  int n = 0;
  int m = 0;
  bool connected = false;
  bool tree = false;
  bool path = false;
  bool cycle = false;
  bool star = false;
  bool complete = false;
  StructuralPredicates sp;
  double so = 0.0;
  double hso = 0.0;
  double cdso = 0.0;
  double m1 = 0.0;

  explicit BoundContext(const Graph& g)
      : n(g.order()), m(g.size()), connected(is_connected(g)), sp(structural_predicates(g)) {
    tree = connected && m == n - 1;
    path = n == 1 || (tree && sp.max_degree <= 2);
    cycle = connected && n >= 3 && sp.min_degree == 2 && sp.max_degree == 2;
    star = is_star_graph(g);
    complete = is_complete_graph(g);
    g.for_each_edge([&](int u, int v) {
      const int x = g.degree(u);
      const int y = g.degree(v);
      so += edge_weight(IndexKind::kSO, x, y);
      hso += edge_weight(IndexKind::kHSO, x, y);
      cdso += edge_weight(IndexKind::kCDSO, x, y);
      m1 += edge_weight(IndexKind::kM1, x, y);
    });
  }
};

BoundReport evaluate(const BoundContext& c, BoundId id, double tol) {
  if (static_cast<int>(id) < 0 || static_cast<int>(id) >= static_cast<int>(kAllBounds.size())) {
    throw std::invalid_argument("unknown bound id " + std::to_string(static_cast<int>(id)));
  }
  const int n = c.n;
  const int m = c.m;
  const double nd = n;
  const double md = m;
  const bool connected = c.connected;
  const StructuralPredicates& sp = c.sp;
  const double delta = sp.min_degree;
  const double big_delta = sp.max_degree;

  BoundReport r;
  r.id = id;
  r.value = bound_index(id) == IndexKind::kHSO ? c.hso : c.cdso;

  // Bounds that divide by a degree are only formed when the graph has edges.
  const bool has_edges = m >= 1;
  switch (id) {
    case BoundId::kHsoGeSqrt2M:
      r.hypothesis_met = connected && n >= 2;
      r.lower = kSqrt2 * md;
#ifdef HSOLAB_CORRUPT_BOUND
      // Test builds only: an inflated bound that graphs must violate.
      *r.lower = 1.5 * *r.lower + 1.0;
#endif
      r.predicted_low = sp.is_regular;
      break;
    case BoundId::kHsoSoSandwich:
      r.hypothesis_met = connected && n >= 2;
      if (has_edges) {
        const double so = c.so;
        r.lower = so / big_delta;
        r.upper = so / delta;
      }
      r.predicted_low = sp.is_regular;
      r.predicted_high = sp.every_edge_touches_min_degree;
      break;
    case BoundId::kHsoGeM1:
      r.hypothesis_met = connected && n >= 2;
      if (has_edges) r.lower = c.m1 / (kSqrt2 * big_delta);
      r.predicted_low = sp.is_regular;
      break;
    case BoundId::kHsoOrderSizeLower:
      r.hypothesis_met = connected && n >= 4;
      r.lower = 2.0 * (kSqrt5 - kSqrt2) * nd + (3.0 * kSqrt2 - 2.0 * kSqrt5) * md;
      r.predicted_low = c.path || c.cycle;
      break;
    case BoundId::kHsoCycleStar:
      r.hypothesis_met = connected && n >= 3;
      r.lower = nd * kSqrt2;
      r.upper = (nd - 1.0) * std::sqrt((nd - 1.0) * (nd - 1.0) + 1.0);
      r.predicted_low = c.cycle;
      r.predicted_high = c.star;
      break;
    case BoundId::kCdsoLeSqrt2M:
      r.hypothesis_met = connected && m >= 1;
      r.upper = kSqrt2 * md;
      r.predicted_high = sp.is_regular;
      break;
    case BoundId::kCdsoGeStarform:
      r.hypothesis_met = connected && m >= 1;
      if (has_edges) r.lower = md * std::sqrt(big_delta * big_delta + 1.0) / big_delta;
      r.predicted_low = c.star && n == m + 1;
      break;
    case BoundId::kCdsoConnectedRange:
      r.hypothesis_met = connected && n >= 3;
      r.lower = std::sqrt((nd - 1.0) * (nd - 1.0) + 1.0);
      r.upper = nd * (nd - 1.0) / kSqrt2;
      r.predicted_low = c.star;
      r.predicted_high = c.complete;
      break;
    case BoundId::kCdsoSoSandwich:
      r.hypothesis_met = connected && n >= 2;
      if (has_edges) {
        const double so = c.so;
        r.lower = so / big_delta;
        r.upper = so / delta;
      }
      r.predicted_low = sp.every_edge_touches_max_degree;
      r.predicted_high = sp.is_regular;
      break;
    case BoundId::kCdsoGeM1:
      r.hypothesis_met = connected && n >= 2;
      if (has_edges) r.lower = c.m1 / (kSqrt2 * big_delta);
      r.predicted_low = sp.is_regular;
      break;
    case BoundId::kCdsoOrderSizeUpper:
      r.hypothesis_met = connected && n >= 4;
      r.upper = (kSqrt5 - 2.0 * kSqrt2) * nd + (3.0 * kSqrt2 - kSqrt5) * md;
      r.predicted_high = c.path || c.cycle;
      break;
    case BoundId::kCdsoTreeRange:
      r.hypothesis_met = c.tree && n >= 4;
      r.lower = std::sqrt((nd - 1.0) * (nd - 1.0) + 1.0);
      r.upper = kSqrt5 + (nd - 3.0) * kSqrt2;
      r.predicted_low = c.star;
      r.predicted_high = c.path;
      break;
    case BoundId::kCdsoLeHso:
      r.hypothesis_met = true;
      r.upper = c.hso;
      r.predicted_high = sp.every_edge_equal_degrees;
      break;
  }

  if (r.lower) {
    r.equality_low = close(r.value, *r.lower, tol);
    if (r.value < *r.lower - tol) r.holds = false;
  } else {
    r.predicted_low = false;
  }
  if (r.upper) {
    r.equality_high = close(r.value, *r.upper, tol);
    if (r.value > *r.upper + tol) r.holds = false;
  } else {
    r.predicted_high = false;
  }
  return r;
}

}  // namespace

BoundReport check_bound(const Graph& g, BoundId id, double tol) { return evaluate(BoundContext(g), id, tol); }

std::vector<BoundReport> check_all(const Graph& g, double tol, bool include_unmet) {
  const BoundContext context(g);
  std::vector<BoundReport> out;
  out.reserve(kAllBounds.size());
  for (const BoundId id : kAllBounds) {
    BoundReport r = evaluate(context, id, tol);
    if (r.hypothesis_met || include_unmet) out.push_back(std::move(r));
  }
  return out;
}

double lemma_phi(IndexKind kind, int r, int s) {
  if (r < 1 || r > s) {
    throw std::invalid_argument("lemma function needs s >= r >= 1, got (" + std::to_string(r) + "," +
                                std::to_string(s) + ")");
  }
  const double h12 = edge_weight(kind, 1, 2);
  const double h22 = edge_weight(kind, 2, 2);
  const double rd = r;
  const double sd = s;
  const double rs = rd * sd;
  return edge_weight(kind, r, s) + 2.0 * h12 * (rs - rd - sd) / rs + h22 * (2.0 * rd + 2.0 * sd - 3.0 * rs) / rs;
}

namespace {

void check_deng_args(int i, int j, int n) {
  if (n < 3 || i < 1 || i > j || j > n - 1) {
    throw std::invalid_argument("star-maximality ratio needs 1 <= i <= j <= n-1 and n >= 3, got (" +
                                std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(n) + ")");
  }
}

}  // namespace

double deng_H(int i, int j, int n) {
  check_deng_args(i, j, n);
  const double id = i;
  const double jd = j;
  const double nm1 = n - 1.0;
  return nm1 / n * std::sqrt(nm1 * nm1 + 1.0) * (id + jd) / (jd * std::hypot(id, jd));
}

double deng_raw(int i, int j, int n) {
  check_deng_args(i, j, n);
  const double nm1 = n - 1.0;
  return edge_weight(IndexKind::kHSO, i, j) -
         nm1 / n * (1.0 / i + 1.0 / j) * edge_weight(IndexKind::kHSO, 1, n - 1);
}

bool in_deng_set(int i, int j, int n) {
  return n >= 3 && 1 <= i && i <= j && j <= n - 1 && !(i == 1 && j == n - 1);
}

namespace {

void check_rs(int r, int s) {
  if (r < 1 || r > s) {
    throw std::invalid_argument("auxiliary function needs s >= r >= 1, got (" + std::to_string(r) + "," +
                                std::to_string(s) + ")");
  }
}

}  // namespace

double prop5_aux_F(int r, int s) {
  check_rs(r, s);
  const double rd = r;
  const double sd = s;
  return (2.0 * kSqrt5 - 3.0 * kSqrt2) * rd * sd - 2.0 * (kSqrt5 - kSqrt2) * (rd + sd) + sd * sd;
}

double prop5_aux_Psi(int r, int s) {
  check_rs(r, s);
  const double rd = r;
  const double sd = s;
  return (2.0 * kSqrt5 - 3.0 * kSqrt2) * rd * sd - 2.0 * (kSqrt5 - kSqrt2) * (rd + sd) + sd * std::hypot(rd, sd);
}

double cdso_decrease_margin(int k) {
  if (k < 1) throw std::invalid_argument("degree must be positive");
  const auto phi = [](int x, int y) { return edge_weight(IndexKind::kCDSO, x, y); };
  const double kd = k;
  return 4.0 * kd * (phi(4 * k, 4 * k) - phi(4 * k + 1, 4 * k)) + kd * (phi(k, k) - phi(k + 1, k)) -
         phi(4 * k + 1, k + 1);
}

namespace {

bool lemma_excluded(int r, int s) { return (r == 1 && s == 1) || (r == 1 && s == 2) || (r == 2 && s == 2); }

}  // namespace

SweepReport sweep_phi_sign(IndexKind kind, int s_max) {
  if (kind != IndexKind::kHSO && kind != IndexKind::kCDSO) {
    throw std::invalid_argument("lemma sign sweep is defined for hso and cdso only");
  }
  if (s_max < 3) throw std::invalid_argument("lemma sign sweep needs s_max >= 3");
  SweepReport rep{std::string("lemma_phi_sign_") + std::string(to_string(kind)), 0, {}};
  const bool want_positive = kind == IndexKind::kHSO;
  for (int s = 1; s <= s_max; ++s) {
    for (int r = 1; r <= s; ++r) {
      if (lemma_excluded(r, s)) continue;
      const double v = lemma_phi(kind, r, s);
      ++rep.checked;
      if (want_positive ? !(v > 0.0) : !(v < 0.0)) rep.violations.push_back({r, s, 0, v});
    }
  }
  return rep;
}

SweepReport sweep_deng(int n_max) {
  SweepReport rep{"deng_H_gt_1", 0, {}};
  for (int n = 3; n <= n_max; ++n) {
    for (int j = 1; j <= n - 1; ++j) {
      for (int i = 1; i <= j; ++i) {
        if (!in_deng_set(i, j, n)) continue;
        const double h = deng_H(i, j, n);
        const double raw = deng_raw(i, j, n);
        ++rep.checked;
        if (!(h > 1.0) || !(raw < 0.0)) rep.violations.push_back({i, j, n, h});
      }
    }
  }
  return rep;
}

SweepReport sweep_aux_F(int s_max) {
  SweepReport rep{"aux_F_positive", 0, {}};
  for (int s = 8; s <= s_max; ++s) {
    const double f = prop5_aux_F(1, s);
    ++rep.checked;
    if (!(f > 0.0)) rep.violations.push_back({1, s, 0, f});
  }
  for (int s = 3; s <= 8; ++s) {
    const double f = prop5_aux_F(s, s);
    ++rep.checked;
    if (!(f > 0.0)) rep.violations.push_back({s, s, 0, f});
  }
  for (int s = 1; s <= s_max; ++s) {
    for (int r = 1; r <= s; ++r) {
      const double gap = prop5_aux_Psi(r, s) - prop5_aux_F(r, s);
      ++rep.checked;
      if (!(gap > 0.0)) rep.violations.push_back({r, s, 1, gap});
    }
  }
  return rep;
}

SweepReport sweep_min_degree_gap(int delta_max, int d_max) {
  SweepReport rep{"hso_min_degree_gap", 0, {}};
  const auto phi = [](int x, int y) { return edge_weight(IndexKind::kHSO, x, y); };
  for (int d0 = 1; d0 <= delta_max; ++d0) {
    const double floor_term = phi(d0, d0 + 1) - phi(d0 + 1, d0 + 1);
    for (int d = d0 + 1; d <= d_max; ++d) {
      const double lhs = phi(d0, d) - phi(d0 + 1, d);
      ++rep.checked;
      // d = d0 + 1 is the equality case; allow rounding there.
      if (lhs < floor_term - 1e-12) rep.violations.push_back({d0, d, 0, lhs - floor_term});
    }
    const double estimate = 2.0 * d0 * phi(d0, d0 + 1) - (2.0 * d0 + 1.0) * phi(d0 + 1, d0 + 1);
    ++rep.checked;
    if (!(estimate > 0.0)) rep.violations.push_back({d0, 0, 1, estimate});
  }
  return rep;
}

SweepReport sweep_cdso_decrease(int k_max) {
  SweepReport rep{"cdso_decrease_margin", 0, {}};
  for (int k = 3; k <= k_max; ++k) {
    const double margin = cdso_decrease_margin(k);
    ++rep.checked;
    if (!(margin > 0.0)) rep.violations.push_back({k, 4 * k, 0, margin});
  }
  return rep;
}

}  // namespace hsolab
