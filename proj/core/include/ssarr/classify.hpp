#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssarr/projgeo.hpp"

namespace ssarr {

struct ModularPoint {
  int index = -1;  // into Lattice::points
  ProjPoint point;
  int multiplicity = 0;
};

/// Points p such that every other intersection point q spans with p a line
/// of the arrangement. Equivalently, every other point shares a line with p.
std::vector<ModularPoint> modular_points(const Arrangement& arrangement, const Lattice& lattice);

bool is_supersolvable(const Arrangement& arrangement, const Lattice& lattice);

/// The common multiplicity of all modular points, if there is at least one
/// and they agree.
std::optional<int> homogeneity(const std::vector<ModularPoint>& modular);

bool is_pencil(const Lattice& lattice);
/// d - 1 concurrent lines and one transversal (any three non-concurrent lines).
bool is_near_pencil(const Lattice& lattice);

/// sum_k n_k (k - 1)^2.
long long tjurina_census(const Lattice& lattice);
/// (d - 1)^2 - d2 * d3 for a free arrangement with exponents (1, d2, d3).
long long tjurina_free(long long d, long long d2, long long d3);

/// One inequality or identity evaluated on an arrangement.
struct Check {
  std::string name;
  bool applicable = false;
  bool pass = false;
  double lhs = 0;
  double rhs = 0;
};

struct ClassifyReport {
  int d = 0;
  bool is_pencil = false;
  bool is_near_pencil = false;
  std::vector<ModularPoint> modular;
  int modular_count = 0;
  std::optional<int> m_homogeneous;
  /// Largest multiplicity of any intersection point.
  int max_multiplicity = 0;
  /// Largest multiplicity of a modular point; 0 when not supersolvable.
  int max_modular_multiplicity = 0;
  Census census;
  std::vector<Check> checks;

  bool supersolvable() const { return modular_count > 0; }
  int n(int k) const;
  /// Throws InputError for an unknown name.
  const Check& check(const std::string& name) const;
  /// True when every applicable check passes.
  bool all_pass() const;
};

/// Check names, in report order.
inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"eqSum", "hirzebruch", "eqSS",  "thm1_bound", "thm2B_bound",
                                              "conj1", "conj2",      "tjurina", "thmHH"};
  return names;
}

/// Evaluates:
///   eqSum        sum n_k C(k,2) = C(d,2)                                  always
///   hirzebruch   n2 + 3/4 n3 - d >= sum_{k>4} (k-4) n_k         neither pencil nor near-pencil
///   eqSS         n2 >= 2 sum n_k - m(d-m) - 2, m = max multiplicity      supersolvable
///   thm1_bound   d <= 3m - 3, m = max modular multiplicity               supersolvable
///   thm2B_bound  n2 >= -2m^2 + (3d-1)m - d^2 + d >= d/2                  supersolvable, not pencil, 2m >= d
///   conj1        n2 >= d/2                                               supersolvable, not pencil
///   conj2        n2 > 0                                                  supersolvable, not pencil
///   tjurina      sum n_k (k-1)^2 = (d-1)^2 - (m-1)(d-m)                  supersolvable
///   thmHH        M <= 4                                                  m-homogeneous with m >= 3
ClassifyReport check_identities(const Arrangement& arrangement, const Lattice& lattice);
ClassifyReport check_identities(const Arrangement& arrangement);

}  // namespace ssarr
