#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ssarr/projgeo.hpp"

namespace ssarr {

/// xyz(x^n - y^n)(y^n - z^n)(x^n - z^n) over Q(zeta_n): 3n + 3 lines.
Arrangement full_monomial(int n);

/// xyz(x^n - y^n)(x^n - z^n) prod_j (z - w_j y): 2n + 3 + k lines.
/// Each w_j must be an n-th root of unity in Q(zeta_n); repeats are rejected.
Arrangement a_of_w(int n, const std::vector<CycNumber>& w);
/// Same, with w_j = zeta_n^{e_j} given by exponents e_j in [0, n).
Arrangement a_of_w(int n, const std::vector<int>& exponents);

/// d lines through (0:0:1).
Arrangement pencil(int d);
/// pencil(d - 1) plus the line z = 0.
Arrangement near_pencil(int d);

/// d' >= 3 lines with small integer coefficients whose lattice consists of
/// C(d',2) double points. Resampled until certified.
Arrangement generic_arrangement(int dprime, std::uint64_t seed);

/// True when every intersection point is a double point.
bool is_generic_arrangement(const Lattice& lattice);

/// A rational point off every base line and off every line joining two
/// intersection points of the base that is not itself a base line.
ProjPoint generic_vertex(const Arrangement& base, std::uint64_t seed);

/// A point on a line through two intersection points of the base that do
/// not share a base line (so two base points end up on one cone line).
/// nullopt when no such pair exists, e.g. for three lines.
std::optional<ProjPoint> adversarial_vertex(const Arrangement& base, std::uint64_t seed);

struct ConeSpec {
  Arrangement base;
  ProjPoint vertex;
  int extra = 0;
  std::uint64_t seed = 0;
};

struct Cone {
  Arrangement arrangement;
  int base_lines = 0;
  /// N' = |C(A')_0 \ A'|, the lines joining the vertex to base points.
  int cone_lines = 0;
  int extra_lines = 0;
  ProjPoint vertex;
};

/// Base lines, then the lines joining the vertex to each intersection point
/// of the base, then `extra` lines through the vertex that pass through no
/// other intersection point. Throws InputError when the vertex lies on a
/// base line or the extra lines cannot be found.
Cone cone(const ConeSpec& spec);

}  // namespace ssarr
