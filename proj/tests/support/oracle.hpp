#pragma once

// Test-side oracles. They share no code with the library beyond reading its
// inputs: geometry is redone in complex floating point, ranks come from an
// SVD, and orbits are found by brute force.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ssarr/projgeo.hpp"

namespace oracle {

using Cx = std::complex<double>;
using NumLine = std::array<Cx, 3>;

Cx root_of_unity(int n, long long j);
Cx to_complex(const ssarr::CycNumber& x);
std::vector<NumLine> to_numeric(const ssarr::Arrangement& a);

// Straight from the defining products, with x^n - y^n = prod (x - zeta^i y).
std::vector<NumLine> full_monomial_lines(int n);
// zeta is sent to exp(2 pi i u / n); u coprime to n gives a Galois conjugate.
std::vector<NumLine> aw_lines(int n, const std::vector<int>& exponents, int u = 1);
// Index in `lines` of the line equal to l, or -1.
int find_line(const std::vector<NumLine>& lines, const NumLine& l);

struct NumLattice {
  int d = 0;
  std::vector<std::vector<int>> incidence;  // sorted line indices per point

  std::map<int, int> census() const;
  long long tau() const;
  int n(int k) const;
  // Points sharing a line with every other point.
  std::vector<int> modular() const;
  int max_mult() const;
};

// Pairwise intersections grouped by |p x q| relative to |p||q|.
NumLattice numeric_lattice(const std::vector<NumLine>& lines);

// Same combinatorics up to relabelling, by trying every permutation (d <= 8).
bool brute_isomorphic(const NumLattice& a, const NumLattice& b);
bool brute_isomorphic(const ssarr::Lattice& a, const ssarr::Lattice& b);

// Numeric rank with a relative singular value cut.
int numeric_rank(const std::vector<std::vector<Cx>>& rows, double rel = 1e-9);

// Minimal degree r <= bound of a nonzero (a, b, c) with a f_x + b f_y + c f_z = 0;
// -1 when there is none.
int numeric_mdr(const std::vector<NumLine>& lines, int bound);

// Points of a line H with multiplicities, the line being parametrized by the
// two coordinates other than its largest one.
struct NumRestriction {
  std::vector<std::array<Cx, 2>> forms;
  std::vector<int> mult;
  int total = 0;
};
NumRestriction numeric_restriction(const std::vector<NumLine>& lines, int h);

// dim of degree-p derivations theta with alpha^m | theta(alpha) for every form.
int numeric_derivation_dim(const NumRestriction& r, int p);
// Exponents read from the jumps of p -> dim D_p, no assumption on their sum.
std::array<int, 2> numeric_exponents(const NumRestriction& r);

// Degree d'-1 forms through all nodes of a nodal arrangement.
int numeric_nodal_dim(const std::vector<NumLine>& lines);

// G-orbits on k-subsets of Z/n, by breadth-first search over generators.
std::set<std::vector<int>> brute_orbits(int n, int k);
std::vector<int> brute_orbit_min(int n, const std::vector<int>& subset);

// Integer polynomial t^n - 1 as the product of Phi_d over d | n, where each
// Phi_d is taken from the library; returns the product coefficients.
std::vector<long long> product_of_cyclotomics(int n);

// splitmix64, for hand-rolled generators.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  long uniform(long lo, long hi);  // inclusive
};

ssarr::Matrix3 random_invertible(const ssarr::CycField& field, Rng& rng);
ssarr::CycNumber random_number(const ssarr::CycField& field, Rng& rng, long range = 5);

}  // namespace oracle
