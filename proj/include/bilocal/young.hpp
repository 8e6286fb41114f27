#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "bilocal/fock.hpp"

namespace bilocal {

/// Weakly decreasing positive row lengths; empty is the trivial diagram.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Throws std::invalid_argument unless rows are positive and weakly decreasing.
  explicit YoungDiagram(std::vector<int> rows);
  static YoungDiagram from_columns(std::vector<int> column_heights);

  const std::vector<int>& rows() const { return rows_; }
  std::vector<int> columns() const;
  int row_count() const { return static_cast<int>(rows_.size()); }
  /// Length of row i (1-based), 0 past the last row.
  int row(int i) const;
  /// Height of column k (1-based), 0 past the last column.
  int column(int k) const;
  int size() const;
  bool empty() const { return rows_.empty(); }

  std::string str() const;
  nlohmann::json to_json() const;
  static YoungDiagram from_json(const nlohmann::json& j);

  auto operator<=>(const YoungDiagram&) const = default;

 private:
  std::vector<int> rows_;
};

/// All diagrams with exactly `size` boxes and at most max_rows rows.
std::vector<YoungDiagram> diagrams_of_size(int size, int max_rows);

/// Complex: (Y+, Y-, N). Real: (Y, N) with Y stored in `plus`.
struct SectorLabel {
  FieldKind kind = FieldKind::Complex;
  YoungDiagram plus;
  YoungDiagram minus;
  int N = 0;

  static SectorLabel complex(YoungDiagram plus, YoungDiagram minus, int N);
  static SectorLabel real(YoungDiagram y, int N);

  /// Total number of boxes |Y+| + |Y-| (or |Y|).
  int boxes() const { return plus.size() + minus.size(); }
  std::string str() const;

  auto operator<=>(const SectorLabel&) const = default;
};

/// r+ + r- <= N (complex) or r + s <= N with r, s the first two column
/// heights (real).
bool unitarity_bound(const SectorLabel& s);

/// Throws BoundViolation naming the violated inequality.
void require_bound(const SectorLabel& s);

/// Every sector satisfying the bound with at most cap boxes, ordered.
std::vector<SectorLabel> enumerate_sectors(FieldKind kind, int N, int cap);

// Pieri rules: the only Littlewood-Richardson products needed.
std::set<YoungDiagram> pieri_add_box(const YoungDiagram& y);
/// Two boxes added, no two in the same column (horizontal strip).
std::set<YoungDiagram> pieri_add_two_boxes_row(const YoungDiagram& y);

}  // namespace bilocal
