#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssarr/projgeo.hpp"

namespace ssarr {

using Monomial = std::array<int, 3>;  // exponents of x, y, z

/// Sparse polynomial in x, y, z. Zero coefficients are never stored.
class MultivarPoly {
 public:
  explicit MultivarPoly(const CycField& field) : field_(field) {}
  static MultivarPoly constant(const CycField& field, const CycNumber& c);
  static MultivarPoly linear(const ProjLine& line);

  const CycField& field() const noexcept { return field_; }
  const std::map<Monomial, CycNumber>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  /// Coefficient of a monomial (zero when absent).
  CycNumber coeff(const Monomial& mono) const;
  void add_term(const Monomial& mono, const CycNumber& c);

  MultivarPoly derivative(int var) const;
  CycNumber evaluate(const Triple& point) const;

  friend MultivarPoly operator*(const MultivarPoly& a, const MultivarPoly& b);
  friend MultivarPoly operator+(const MultivarPoly& a, const MultivarPoly& b);
  friend bool operator==(const MultivarPoly& a, const MultivarPoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  CycField field_;
  std::map<Monomial, CycNumber> terms_;
};

/// Monomials of degree r in x, y, z, in lexicographically decreasing order.
std::vector<Monomial> monomials(int r);

MultivarPoly defining_polynomial(const Arrangement& arrangement);

struct MdrResult {
  std::optional<int> value;
  /// Kernel dimension of (a,b,c) -> a f_x + b f_y + c f_z in each degree
  /// r = 0, 1, ... examined, ending at value when present.
  std::vector<int> degree_dims;
  int bound = 0;
};

/// Default search bound floor((d - 1) / 2).
int default_mdr_bound(const Arrangement& arrangement);

/// Minimal degree of a Jacobian syzygy. Kernel dimensions are certified by a
/// rank computation modulo a large prime and confirmed by exact kernel
/// vectors. bound >= d - 1 is rejected.
MdrResult mdr(const Arrangement& arrangement, std::optional<int> bound = std::nullopt);
/// Same answer by exact elimination over the field only. Slow, for checks.
MdrResult mdr_exact(const Arrangement& arrangement, std::optional<int> bound = std::nullopt);

struct ExponentTriple {
  int d1 = 1;
  int d2 = 0;
  int d3 = 0;
  friend bool operator==(const ExponentTriple&, const ExponentTriple&) = default;
};

/// (1, m - 1, d - m) for the largest modular multiplicity m. Asserts the
/// Tjurina identity; with check_mdr also asserts mdr = min(m - 1, d - m).
/// Throws InputError when the arrangement is not supersolvable.
ExponentTriple supersolvable_exponents(const Arrangement& arrangement, bool check_mdr = false);

/// Rank-2 multiarrangement on a line H. Forms are a*s + b*t in the two
/// coordinates left after dropping the pivot variable of H, normalized with
/// first nonzero coefficient 1.
struct MultiRestriction {
  std::vector<std::array<CycNumber, 2>> forms;
  std::vector<int> mult;
  int total = 0;
  /// Coordinates kept on H, e.g. {1, 2} for (y, z).
  std::array<int, 2> coords{};
};

MultiRestriction ziegler_restriction(const Arrangement& arrangement, std::size_t line);
MultiRestriction ziegler_restriction(const Arrangement& arrangement, const Lattice& lattice, std::size_t line);

struct ExponentPair {
  int d1 = 0;
  int d2 = 0;
  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

/// dim D(R)_p, the derivations P d/ds + Q d/dt of degree p with
/// alpha_X^m(X) | theta(alpha_X) for every X.
int derivation_dimension(const MultiRestriction& r, int p);

struct MultiExponents {
  ExponentPair exponents;
  std::vector<std::pair<int, int>> degree_dims;  // (p, dim D(R)_p) for the degrees examined
  bool easy = false;             // closed form used, kernel checked
};

/// |m| - |A| + 1 <= |A| - 1.
bool easy_applies(const MultiRestriction& r);
/// (|m| - |A| + 1, |A| - 1).
ExponentPair easy_exponents(const MultiRestriction& r);

MultiExponents multi_exponents(const MultiRestriction& r);
/// Degree-by-degree kernel search, no closed form.
MultiExponents multi_exponents_by_kernel(const MultiRestriction& r);

/// No point carries at least half of the total multiplicity.
bool is_balanced(const MultiRestriction& r);

struct NodalResult {
  int dimension = 0;     // forms of degree d' - 1 vanishing at all nodes
  int products_rank = 0; // rank of {g / l_i}
  bool products_vanish = false;
};

/// Throws InputError unless every intersection point is a double point.
NodalResult nodal_vanishing_dimension(const Arrangement& arrangement);

}  // namespace ssarr
