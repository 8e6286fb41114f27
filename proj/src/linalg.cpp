#include "bilocal/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace bilocal {

void RationalMatrix::append_row(const std::vector<Rational>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RowEchelon row_reduce(RationalMatrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
    }
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (m(lead_row, k) != 0) m(r, k) -= f * m(lead_row, k);
      }
    }
    out.pivot_cols.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      v[e.pivot_cols[r]] = -e.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RowEchelon e = row_reduce(std::move(aug));
  std::vector<Rational> x(m.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    const std::size_t c = e.pivot_cols[r];
    if (c == m.cols()) return std::nullopt;
    x[c] = e.reduced(r, m.cols());
  }
  return x;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(pivot, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("leading_principal_minors: matrix not square");
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RationalMatrix block(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) block(r, c) = m(r, c);
    out.push_back(determinant(std::move(block)));
  }
  return out;
}

bool is_positive_semidefinite(const RationalMatrix& in) {
  if (in.rows() != in.cols()) throw std::invalid_argument("is_positive_semidefinite: matrix not square");
  RationalMatrix m = in;
  const std::size_t n = m.rows();
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // Pick any remaining positive diagonal entry as the pivot.
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (m(i, i) < 0) return false;
      if (m(i, i) > 0 && p == n) p = i;
    }
    if (p == n) {
      // All remaining diagonals are zero: PSD only if the remaining block vanishes.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && m(i, j) != 0) return false;
      return true;
    }
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m(i, p) == 0) continue;
      const Rational f = m(i, p) / m(p, p);
      for (std::size_t j = 0; j < n; ++j) {
        if (!done[j]) m(i, j) -= f * m(p, j);
      }
    }
  }
  return true;
}

}  // namespace bilocal
