#include "bilocal/young.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "bilocal/errors.hpp"

namespace bilocal {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw std::invalid_argument("Young diagram rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw std::invalid_argument("Young diagram rows must be weakly decreasing");
  }
}

YoungDiagram YoungDiagram::from_columns(std::vector<int> column_heights) {
  std::erase(column_heights, 0);
  for (std::size_t k = 1; k < column_heights.size(); ++k) {
    if (column_heights[k] > column_heights[k - 1]) {
      throw std::invalid_argument("column heights must be weakly decreasing");
    }
  }
  std::vector<int> rows;
  if (!column_heights.empty()) {
    rows.assign(static_cast<std::size_t>(column_heights.front()), 0);
    for (int h : column_heights) {
      if (h < 0) throw std::invalid_argument("column heights must be nonnegative");
      for (int r = 0; r < h; ++r) ++rows[r];
    }
  }
  return YoungDiagram(std::move(rows));
}

std::vector<int> YoungDiagram::columns() const {
  std::vector<int> cols;
  if (rows_.empty()) return cols;
  cols.assign(static_cast<std::size_t>(rows_.front()), 0);
  for (int len : rows_)
    for (int c = 0; c < len; ++c) ++cols[c];
  return cols;
}

int YoungDiagram::row(int i) const { return i >= 1 && i <= row_count() ? rows_[i - 1] : 0; }

int YoungDiagram::column(int k) const {
  int h = 0;
  for (int len : rows_) {
    if (len >= k) ++h;
  }
  return k >= 1 ? h : 0;
}

int YoungDiagram::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

std::string YoungDiagram::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(rows_[i]);
  }
  return out + "]";
}

nlohmann::json YoungDiagram::to_json() const { return rows_; }

YoungDiagram YoungDiagram::from_json(const nlohmann::json& j) { return YoungDiagram(j.get<std::vector<int>>()); }

std::vector<YoungDiagram> diagrams_of_size(int size, int max_rows) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_rows) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  if (size < 0) return out;
  rec(size, size);
  std::sort(out.begin(), out.end());
  return out;
}

SectorLabel SectorLabel::complex(YoungDiagram plus, YoungDiagram minus, int N) {
  return {FieldKind::Complex, std::move(plus), std::move(minus), N};
}

SectorLabel SectorLabel::real(YoungDiagram y, int N) { return {FieldKind::Real, std::move(y), {}, N}; }

std::string SectorLabel::str() const {
  if (kind == FieldKind::Complex) {
    return "(" + plus.str() + "," + minus.str() + ",N=" + std::to_string(N) + ")";
  }
  return "(" + plus.str() + ",N=" + std::to_string(N) + ")";
}

bool unitarity_bound(const SectorLabel& s) {
  if (s.N < 0) return false;
  if (s.kind == FieldKind::Complex) return s.plus.row_count() + s.minus.row_count() <= s.N;
  return s.plus.column(1) + s.plus.column(2) <= s.N;
}

void require_bound(const SectorLabel& s) {
  if (unitarity_bound(s)) return;
  if (s.kind == FieldKind::Complex) {
    throw BoundViolation("r+ + r- <= N violated: " + std::to_string(s.plus.row_count()) + " + " +
                         std::to_string(s.minus.row_count()) + " > " + std::to_string(s.N));
  }
  throw BoundViolation("r + s <= N violated: " + std::to_string(s.plus.column(1)) + " + " +
                       std::to_string(s.plus.column(2)) + " > " + std::to_string(s.N));
}

std::vector<SectorLabel> enumerate_sectors(FieldKind kind, int N, int cap) {
  std::vector<SectorLabel> out;
  for (int total = 0; total <= cap; ++total) {
    if (kind == FieldKind::Real) {
      for (auto& y : diagrams_of_size(total, std::max(N, 0))) {
        auto s = SectorLabel::real(y, N);
        if (unitarity_bound(s)) out.push_back(s);
      }
      continue;
    }
    for (int np = 0; np <= total; ++np) {
      for (auto& yp : diagrams_of_size(np, std::max(N, 0))) {
        for (auto& ym : diagrams_of_size(total - np, std::max(N, 0))) {
          auto s = SectorLabel::complex(yp, ym, N);
          if (unitarity_bound(s)) out.push_back(s);
        }
      }
    }
  }
  return out;
}

std::set<YoungDiagram> pieri_add_box(const YoungDiagram& y) {
  std::set<YoungDiagram> out;
  const auto& rows = y.rows();
  for (std::size_t i = 0; i <= rows.size(); ++i) {
    std::vector<int> r = rows;
    if (i == rows.size()) {
      r.push_back(1);
    } else {
      if (i > 0 && rows[i] + 1 > rows[i - 1]) continue;
      ++r[i];
    }
    out.insert(YoungDiagram(r));
  }
  return out;
}

std::set<YoungDiagram> pieri_add_two_boxes_row(const YoungDiagram& y) {
  std::set<YoungDiagram> out;
  for (const auto& once : pieri_add_box(y)) {
    for (const auto& twice : pieri_add_box(once)) {
      // Horizontal strip: no column of the result gains two boxes.
      const auto before = y.columns();
      const auto after = twice.columns();
      bool ok = true;
      for (std::size_t k = 0; k < after.size(); ++k) {
        const int old = k < before.size() ? before[k] : 0;
        if (after[k] - old > 1) ok = false;
      }
      if (ok) out.insert(twice);
    }
  }
  return out;
}

}  // namespace bilocal
