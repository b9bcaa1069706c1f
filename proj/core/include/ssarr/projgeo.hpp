#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssarr/field.hpp"

namespace ssarr {

using Triple = std::array<CycNumber, 3>;

/// A point of P^2, scaled so that its first nonzero coordinate is 1.
struct ProjPoint {
  Triple coords;

  /// Normalizes; throws InputError when all coordinates vanish.
  static ProjPoint make(const Triple& raw);
  static ProjPoint make(const CycField& field, long x, long y, long z);

  const CycField& field() const noexcept { return coords[0].field(); }
  std::string to_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.coords < b.coords; }
};

/// The line cx*x + cy*y + cz*z = 0, scaled so the first nonzero coefficient is 1.
struct ProjLine {
  Triple coeffs;

  static ProjLine make(const Triple& raw);
  static ProjLine make(const CycField& field, long cx, long cy, long cz);

  const CycField& field() const noexcept { return coeffs[0].field(); }
  CycNumber evaluate(const Triple& v) const;
  bool contains(const ProjPoint& p) const { return evaluate(p.coords).is_zero(); }
  /// Index of the first nonzero coefficient.
  int pivot() const;
  std::string to_string() const;

  friend bool operator==(const ProjLine&, const ProjLine&) = default;
  friend bool operator<(const ProjLine& a, const ProjLine& b) { return a.coeffs < b.coeffs; }
};

/// Throws InputError("coincident lines") when l1 == l2.
ProjPoint line_intersect(const ProjLine& l1, const ProjLine& l2);
/// Throws InputError when p == q.
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);

/// 3x3 matrix over a cyclotomic field, row-major.
struct Matrix3 {
  std::array<Triple, 3> m;

  static Matrix3 identity(const CycField& field);
  /// Columns given as three triples.
  static Matrix3 from_columns(const Triple& c0, const Triple& c1, const Triple& c2);

  CycNumber determinant() const;
  Matrix3 inverse() const;
  Triple apply(const Triple& v) const;
  /// Row vector times matrix.
  Triple apply_left(const Triple& row) const;
  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
};

/// An ordered list of distinct lines over one field.
class Arrangement {
 public:
  /// Throws InputError on an empty list, a duplicate line or a field mismatch.
  Arrangement(const CycField& field, std::vector<ProjLine> lines);

  const CycField& field() const noexcept { return field_; }
  const std::vector<ProjLine>& lines() const noexcept { return lines_; }
  std::size_t size() const noexcept { return lines_.size(); }
  const ProjLine& operator[](std::size_t i) const { return lines_[i]; }

  std::optional<std::size_t> index_of(const ProjLine& line) const;
  bool contains(const ProjLine& line) const { return index_.count(line) != 0; }

 private:
  CycField field_;
  std::vector<ProjLine> lines_;
  std::map<ProjLine, std::size_t> index_;
};

/// Intersection points of an arrangement with multiplicities and incidences.
struct Lattice {
  std::size_t line_count = 0;
  std::vector<ProjPoint> points;
  std::vector<int> mult;
  /// Sorted line indices through each point.
  std::vector<std::vector<int>> incidence;
  /// Sorted point indices on each line.
  std::vector<std::vector<int>> points_on_line;
  /// meet[i * d + j] is the point where lines i and j cross; -1 when i == j.
  std::vector<int> meet;

  std::size_t size() const noexcept { return points.size(); }
  int meet_point(int i, int j) const { return meet[static_cast<std::size_t>(i) * line_count + static_cast<std::size_t>(j)]; }
  int max_multiplicity() const;
};

/// Groups the C(d,2) pairwise intersections; requires d >= 2.
/// Verifies sum_p C(m_p, 2) = C(d, 2) before returning.
Lattice build_lattice(const Arrangement& arrangement);

/// Builds a lattice from purely combinatorial data (point -> incident lines).
/// Coordinates are left empty. Used for tests and lattice comparisons.
Lattice lattice_from_incidence(std::size_t line_count, std::vector<std::vector<int>> incidence);

/// k -> n_k. Throws InternalError if sum n_k C(k,2) != C(d,2).
using Census = std::map<int, int>;
Census census(const Lattice& lattice);

/// Substitutes v -> M v in every defining equation: a line with coefficient
/// row l becomes l M. Throws InputError when M is singular.
Arrangement apply_transform(const Arrangement& arrangement, const Matrix3& transform);

}  // namespace ssarr
