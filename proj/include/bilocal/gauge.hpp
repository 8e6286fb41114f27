#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bilocal/fock.hpp"
#include "bilocal/report.hpp"
#include "bilocal/young.hpp"

namespace bilocal {

/// U(N) irrep label: diagram and U(1) charge, with q = |Y| mod N.
struct GaugeIrrepU {
  YoungDiagram Y;
  int q = 0;

  auto operator<=>(const GaugeIrrepU&) const = default;
  nlohmann::json to_json() const { return {{"Y", Y.to_json()}, {"q", q}}; }
  std::string str() const { return "(" + Y.str() + "," + std::to_string(q) + ")"; }
};

enum class OSign { Plus, Minus };

/// O(N) irrep label: diagram with at most N/2 rows and a determinant sign.
struct GaugeIrrepO {
  YoungDiagram Y;
  OSign sign = OSign::Plus;

  auto operator<=>(const GaugeIrrepO&) const = default;
  nlohmann::json to_json() const { return {{"Y", Y.to_json()}, {"sign", sign == OSign::Plus ? "+" : "-"}}; }
  std::string str() const { return "(" + Y.str() + "," + (sign == OSign::Plus ? "+" : "-") + ")"; }
};

/// Diagram whose columns are N - r_k in reversed order (zero heights dropped).
/// Throws std::invalid_argument if a column of Y is taller than N.
YoungDiagram conjugate_relative(const YoungDiagram& y, int N);

/// Juxtaposition of (Y-)^* and Y+; q = |Y+| - |Y-|.
GaugeIrrepU sector_to_irrep_U(const SectorLabel& s);

/// Inverse split. Throws InvariantViolation when (Y, q) admits no split
/// (e.g. a leading column of height N inside the conjugate part).
SectorLabel irrep_U_to_sector(const GaugeIrrepU& irr, int N);

/// U(N) dominant highest weight lambda_1 >= ... >= lambda_N of the label.
std::vector<int> highest_weight_U(const GaugeIrrepU& irr, int N);

/// Label whose highest weight is lambda (inverse of highest_weight_U on the
/// labels that come from sectors).
GaugeIrrepU irrep_U_from_highest_weight(const std::vector<int>& lambda);

/// Weyl dimension formula.
Integer weyl_dimension_U(const GaugeIrrepU& irr, int N);

/// Which inequality direction to use in the determinant relabeling of the
/// real case. `Printed` applies the inequalities literally as stated in the
/// source text; `Corrected` swaps them so every produced label has at most
/// N/2 rows. Only `Corrected` yields a bijection (see the bijection check).
enum class ORule { Corrected, Printed };

struct OLabeling {
  GaugeIrrepO canonical;
  /// Present when the rule produces a second, equivalent label (r = N/2).
  std::optional<GaugeIrrepO> equivalent;
  /// Whether the canonical label has at most N/2 rows.
  bool standard = true;
};

/// Real sector Y (r + s <= N) to its O(N) label.
OLabeling sector_to_irrep_O(const YoungDiagram& y, int N, ORule rule = ORule::Corrected);

/// Inverse relabeling; throws InvariantViolation for labels with more than N/2 rows.
YoungDiagram irrep_O_to_sector(const GaugeIrrepO& label, int N);

CheckReport bijection_roundtrip_check_U(int N, int cap);
CheckReport bijection_roundtrip_check_O(int N, int cap);

/// Gauge generator E^{pq} = sum_{i<=M} (a_i^{p*} a_i^q - b_i^{q*} b_i^p) (complex),
/// or the so(N) generator sum_i (a_i^{p*} a_i^q - a_i^{q*} a_i^p) (real).
FockVector apply_gauge_generator(const FockContext& ctx, int p, int q, const FockVector& v);

/// Gauge generators commute with every bilocal generator on the margin subspace.
CheckReport verify_gauge_commutant(const FockContext& ctx, int margin);

/// E^{pq} v = 0 for all p < q (complex case).
CheckReport verify_gauge_highest_weight(const FockContext& ctx, const FockVector& v);

}  // namespace bilocal
