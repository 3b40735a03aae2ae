#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsolab/graph.hpp"
#include "hsolab/indices.hpp"

namespace hsolab {

inline constexpr double kEqualityTolerance = 1e-9;

enum class BoundId {
  kHsoGeSqrt2M,
  kHsoSoSandwich,
  kHsoGeM1,
  kHsoOrderSizeLower,
  kHsoCycleStar,
  kCdsoLeSqrt2M,
  kCdsoGeStarform,
  kCdsoConnectedRange,
  kCdsoSoSandwich,
  kCdsoGeM1,
  kCdsoOrderSizeUpper,
  kCdsoTreeRange,
  kCdsoLeHso,
};

inline constexpr std::array<BoundId, 13> kAllBounds = {
    BoundId::kHsoGeSqrt2M,       BoundId::kHsoSoSandwich,  BoundId::kHsoGeM1,
    BoundId::kHsoOrderSizeLower, BoundId::kHsoCycleStar,   BoundId::kCdsoLeSqrt2M,
    BoundId::kCdsoGeStarform,    BoundId::kCdsoConnectedRange, BoundId::kCdsoSoSandwich,
    BoundId::kCdsoGeM1,          BoundId::kCdsoOrderSizeUpper, BoundId::kCdsoTreeRange,
    BoundId::kCdsoLeHso,
};

std::string_view to_string(BoundId id);
std::optional<BoundId> parse_bound_id(std::string_view name);

/// Index whose value a bound constrains.
IndexKind bound_index(BoundId id);

/// Verdict of one inequality on one graph.
///
/// A side that the inequality does not have is std::nullopt, with its
/// equality and prediction flags false. equality_* come from the numeric
/// test |value - bound| <= tol; predicted_* come from the structural
/// iff-condition attached to that side.
struct BoundReport {
  BoundId id{};
  double value = 0.0;
  std::optional<double> lower;
  std::optional<double> upper;
  bool hypothesis_met = false;
  bool holds = true;
  bool equality_low = false;
  bool equality_high = false;
  bool predicted_low = false;
  bool predicted_high = false;

  bool structural_equality_predicted() const { return predicted_low || predicted_high; }
  bool equality_matches_prediction() const {
    return equality_low == predicted_low && equality_high == predicted_high;
  }
  /// False exactly when the graph is a counterexample to the statement.
  bool verified() const { return !hypothesis_met || (holds && equality_matches_prediction()); }
};

/// Throws std::invalid_argument for an id outside the enumeration.
BoundReport check_bound(const Graph& g, BoundId id, double tol = kEqualityTolerance);

/// Reports ordered by id. Unless include_unmet, bounds whose hypothesis the
/// graph fails are left out.
std::vector<BoundReport> check_all(const Graph& g, double tol = kEqualityTolerance, bool include_unmet = false);

// --- auxiliary functions from the proofs -----------------------------------

/// Lemma function for a BID index h with s >= r >= 1:
///   h(r,s) + 2h(1,2)(rs - r - s)/(rs) + h(2,2)(2r + 2s - 3rs)/(rs).
double lemma_phi(IndexKind kind, int r, int s);

/// Ratio whose excess over 1 is equivalent to the star-maximality condition
/// at (i, j) for order n; requires 1 <= i <= j <= n-1, n >= 3.
double deng_H(int i, int j, int n);

/// The raw star-maximality expression h(i,j) - (n-1)/n (1/i + 1/j) h(1,n-1)
/// with h the HSO contribution; negative on the whole admissible set.
double deng_raw(int i, int j, int n);

/// Admissible pairs: 1 <= i <= j <= n-1 without (1, n-1).
bool in_deng_set(int i, int j, int n);

/// Lower estimate used for the HSO order-size bound; s >= r >= 1.
double prop5_aux_F(int r, int s);
/// (rs) times the HSO lemma function; s >= r >= 1.
double prop5_aux_Psi(int r, int s);

/// Margin of the CDSO edge-addition decrease estimate for d(v) = k,
/// d(u) = 4k: positive means the estimate proves a strict decrease.
double cdso_decrease_margin(int k);

struct SweepPoint {
  int a = 0;
  int b = 0;
  int c = 0;  // third coordinate where the sweep has one (n for the H sweep)
  double value = 0.0;
};

struct SweepReport {
  std::string name;
  long checked = 0;
  std::vector<SweepPoint> violations;
  bool passed() const { return violations.empty() && checked > 0; }
};

/// Sign of the lemma function over 1 <= r <= s <= s_max minus
/// {(1,1),(1,2),(2,2)}: HSO expects > 0, CDSO expects < 0. Other indices
/// throw std::invalid_argument, as does s_max < 3.
SweepReport sweep_phi_sign(IndexKind kind, int s_max);

/// H > 1 (and the raw expression < 0) on the admissible set, 3 <= n <= n_max.
SweepReport sweep_deng(int n_max);

/// F(1,s) > 0 for 8 <= s <= s_max, F(s,s) > 0 for 3 <= s <= 8, and
/// Psi > F for all 1 <= r <= s <= s_max.
SweepReport sweep_aux_F(int s_max);

/// phi(d0,d) - phi(d0+1,d) >= phi(d0,d0+1) - phi(d0+1,d0+1) for
/// 1 <= d0 <= delta_max, d0 < d <= d_max, with phi the HSO contribution,
/// plus positivity of the resulting lower estimate for every d0.
SweepReport sweep_min_degree_gap(int delta_max, int d_max);

/// cdso_decrease_margin(k) > 0 for 3 <= k <= k_max.
SweepReport sweep_cdso_decrease(int k_max);

}  // namespace hsolab
