#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssarr/projgeo.hpp"

namespace ssarr {

/// (zeta_n^{e_1}, ..., zeta_n^{e_k}) with distinct exponents in [0, n).
struct WTuple {
  int n = 1;
  std::vector<int> exponents;

  /// Throws InputError unless 0 <= k <= n and entries are distinct in [0, n).
  void validate() const;
};

/// Lexicographically least sorted exponent list over the orbit of the group
/// generated by permutations, translations e -> e + a and inversion e -> -e.
struct WClass {
  int n = 1;
  int k = 0;
  std::vector<int> exponents;

  std::string to_string() const;
  friend bool operator==(const WClass&, const WClass&) = default;
  friend auto operator<=>(const WClass&, const WClass&) = default;
};

WClass canonicalize(const WTuple& w);

/// Group generators, used by tests of orbit invariance.
WTuple translate(const WTuple& w, int a);
WTuple invert(const WTuple& w);
WTuple transpose(const WTuple& w, std::size_t i, std::size_t j);

/// All classes of k-subsets of mu_n, sorted.
std::vector<WClass> enumerate_classes(int n, int k);

/// 2 when k < n, 3 when k = n >= 2, 4 when k = n = 1.
int predicted_modular_count(int n, int k);

struct RecoveredClass {
  int n = 0;  // m - 2
  int k = 0;
  WClass cls;
  bool full_monomial = false;
};

/// Reads off [w] from an m-homogeneous supersolvable arrangement with at
/// least two modular points and m >= 3. Throws InputError when those
/// hypotheses fail and InternalError when the structure forced by the
/// classification does not appear.
RecoveredClass recover_class(const Arrangement& arrangement);
RecoveredClass recover_class(const Arrangement& arrangement, const Lattice& lattice);

}  // namespace ssarr
