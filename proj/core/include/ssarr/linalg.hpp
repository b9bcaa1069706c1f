#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ssarr/field.hpp"

namespace ssarr {

/// Dense row-major matrix over a cyclotomic field.
class FieldMatrix {
 public:
  FieldMatrix(const CycField& field, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const CycField& field() const noexcept { return field_; }

  CycNumber& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycNumber& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<CycNumber> multiply(const std::vector<CycNumber>& v) const;

 private:
  CycField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<CycNumber> data_;
};

/// Reduced row echelon form computed in place by Gauss-Jordan elimination.
/// Returns the pivot columns in increasing order.
std::vector<std::size_t> reduce_to_rref(FieldMatrix& m);

std::size_t rank(FieldMatrix m);

/// Basis of {v : m v = 0}, one vector per free column, with a 1 in that
/// column and 0 in the other free columns.
std::vector<std::vector<CycNumber>> nullspace(FieldMatrix m);

/// Solves a x = b for square a; nullopt when a is singular.
std::optional<std::vector<CycNumber>> solve_square(FieldMatrix a, std::vector<CycNumber> b);

CycNumber determinant(FieldMatrix m);

}  // namespace ssarr
