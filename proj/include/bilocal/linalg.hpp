#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bilocal/rational.hpp"

namespace bilocal {

/// Dense row-major matrix over the rationals. Sizes here stay small (weight
/// blocks, Gram matrices), so a dense exact elimination is adequate.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<Rational>& row);

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RationalMatrix reduced;              // reduced row echelon form
  std::vector<std::size_t> pivot_cols; // one per nonzero row
};

RowEchelon row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Some solution of m x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b);

Rational determinant(RationalMatrix m);

/// det of the k x k top-left block for k = 1..n.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

/// Exact test via symmetric elimination; m must be symmetric.
bool is_positive_semidefinite(const RationalMatrix& m);

}  // namespace bilocal
