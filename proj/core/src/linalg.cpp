#include "ssarr/linalg.hpp"

#include <utility>

#include "ssarr/errors.hpp"

namespace ssarr {

FieldMatrix::FieldMatrix(const CycField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, CycNumber(field)) {}

std::vector<CycNumber> FieldMatrix::multiply(const std::vector<CycNumber>& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector size mismatch");
  std::vector<CycNumber> out(rows_, CycNumber(field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const CycNumber& a = (*this)(r, c);
      if (a.is_zero() || v[c].is_zero()) continue;
      out[r] += a * v[c];
    }
  }
  return out;
}

namespace {

void swap_rows(FieldMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

std::vector<std::size_t> reduce_to_rref(FieldMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t found = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found == m.rows()) continue;
    swap_rows(m, row, found);
    const CycNumber inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const CycNumber factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

namespace {

using IntRow = std::vector<mpz_class>;

// Rows scaled to integers by the lcm of their denominators.
std::vector<IntRow> integer_rows(const FieldMatrix& m) {
  std::vector<IntRow> out(m.rows(), IntRow(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).rational_value().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      const Rational& q = m(r, c).rational_value();
      out[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

// Fraction-free Gauss-Jordan. Every division is exact, and afterwards each
// pivot row holds D times the matching row of the reduced echelon form,
// where D is the common value of all pivot entries.
std::vector<std::size_t> bareiss_jordan(std::vector<IntRow>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t row = 0;
  mpz_class t;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t found = a.size();
    for (std::size_t r = row; r < a.size(); ++r) {
      if (a[r][col] != 0) {
        found = r;
        break;
      }
    }
    if (found == a.size()) continue;
    std::swap(a[row], a[found]);
    const mpz_class piv = a[row][col];
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row) continue;
      const mpz_class factor = a[r][col];
      for (std::size_t c = 0; c < cols; ++c) {
        if (c == col) continue;
        // a[r][c] = (piv * a[r][c] - factor * a[row][c]) / prev
        t = piv * a[r][c];
        if (factor != 0 && a[row][c] != 0) t -= factor * a[row][c];
        mpz_divexact(a[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = piv;
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(FieldMatrix m) {
  if (m.field().order() == 1) {
    auto rows = integer_rows(m);
    return bareiss_jordan(rows, m.cols()).size();
  }
  return reduce_to_rref(m).size();
}

std::vector<std::vector<CycNumber>> nullspace(FieldMatrix m) {
  if (m.field().order() == 1) {
    auto rows = integer_rows(m);
    const auto pivots = bareiss_jordan(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<CycNumber>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
      if (is_pivot[free]) continue;
      std::vector<CycNumber> v(m.cols(), CycNumber(m.field()));
      v[free] = CycNumber(m.field(), 1);
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        const mpz_class num = -rows[i][free];
        Rational q(num, rows[i][pivots[i]]);
        q.canonicalize();
        v[pivots[i]] = CycNumber(m.field(), q);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }
  const auto pivots = reduce_to_rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<CycNumber>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<CycNumber> v(m.cols(), CycNumber(m.field()));
    v[free] = CycNumber(m.field(), 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<CycNumber>> solve_square(FieldMatrix a, std::vector<CycNumber> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw InputError("solve_square requires a square system");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = n;
    for (std::size_t r = col; r < n; ++r) {
      if (!a(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found == n) return std::nullopt;
    swap_rows(a, col, found);
    std::swap(b[col], b[found]);
    const CycNumber inv = a(col, col).inverse();
    for (std::size_t c = col; c < n; ++c) {
      if (!a(col, c).is_zero()) a(col, c) *= inv;
    }
    b[col] *= inv;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const CycNumber factor = a(r, col);
      for (std::size_t c = col; c < n; ++c) {
        if (!a(col, c).is_zero()) a(r, c) -= factor * a(col, c);
      }
      if (!b[col].is_zero()) b[r] -= factor * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t c = i + 1; c < n; ++c) {
      if (!a(i, c).is_zero() && !b[c].is_zero()) b[i] -= a(i, c) * b[c];
    }
  }
  return b;
}

CycNumber determinant(FieldMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InputError("determinant of a non-square matrix");
  CycNumber det(m.field(), 1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = n;
    for (std::size_t r = col; r < n; ++r) {
      if (!m(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found == n) return CycNumber(m.field());
    if (found != col) {
      swap_rows(m, col, found);
      det = -det;
    }
    det *= m(col, col);
    const CycNumber inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const CycNumber factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) {
        if (!m(col, c).is_zero()) m(r, c) -= factor * m(col, c);
      }
    }
  }
  return det;
}

}  // namespace ssarr
