#include "ssarr/classify.hpp"

#include <algorithm>

#include "ssarr/errors.hpp"

namespace ssarr {

std::vector<ModularPoint> modular_points(const Arrangement& arrangement, const Lattice& lattice) {
  if (arrangement.size() < 2) throw InputError("modular_points requires at least two lines");
  if (lattice.line_count != arrangement.size()) throw InputError("lattice does not belong to arrangement");
  std::vector<ModularPoint> out;
  const std::size_t count = lattice.size();
  std::vector<char> reached(count);
  for (std::size_t p = 0; p < count; ++p) {
    // Every point on a line through p is joined to p by that line; p is
    // modular iff these lines cover all points.
    std::fill(reached.begin(), reached.end(), 0);
    for (int l : lattice.incidence[p]) {
      for (int q : lattice.points_on_line[static_cast<std::size_t>(l)]) reached[static_cast<std::size_t>(q)] = 1;
    }
    if (std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; })) {
      out.push_back({static_cast<int>(p), lattice.points[p], lattice.mult[p]});
    }
  }
  return out;
}

bool is_supersolvable(const Arrangement& arrangement, const Lattice& lattice) {
  return !modular_points(arrangement, lattice).empty();
}

std::optional<int> homogeneity(const std::vector<ModularPoint>& modular) {
  if (modular.empty()) return std::nullopt;
  const int m = modular.front().multiplicity;
  for (const auto& mp : modular) {
    if (mp.multiplicity != m) return std::nullopt;
  }
  return m;
}

bool is_pencil(const Lattice& lattice) {
  return lattice.size() == 1 && lattice.mult[0] == static_cast<int>(lattice.line_count);
}

bool is_near_pencil(const Lattice& lattice) {
  const int d = static_cast<int>(lattice.line_count);
  return d >= 3 && !is_pencil(lattice) && lattice.max_multiplicity() == d - 1;
}

long long tjurina_census(const Lattice& lattice) {
  long long tau = 0;
  for (int k : lattice.mult) tau += static_cast<long long>(k - 1) * (k - 1);
  return tau;
}

long long tjurina_free(long long d, long long d2, long long d3) { return (d - 1) * (d - 1) - d2 * d3; }

int ClassifyReport::n(int k) const {
  auto it = census.find(k);
  return it == census.end() ? 0 : it->second;
}

const Check& ClassifyReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw InputError("unknown check '" + name + "'");
}

bool ClassifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return !c.applicable || c.pass; });
}

ClassifyReport check_identities(const Arrangement& arrangement, const Lattice& lattice) {
  if (arrangement.size() < 3) throw InputError("check_identities requires at least three lines");
  ClassifyReport r;
  const long long d = static_cast<long long>(arrangement.size());
  r.d = static_cast<int>(d);
  r.census = census(lattice);
  r.is_pencil = is_pencil(lattice);
  r.is_near_pencil = is_near_pencil(lattice);
  r.modular = modular_points(arrangement, lattice);
  r.modular_count = static_cast<int>(r.modular.size());
  r.m_homogeneous = homogeneity(r.modular);
  r.max_multiplicity = lattice.max_multiplicity();
  for (const auto& mp : r.modular) r.max_modular_multiplicity = std::max(r.max_modular_multiplicity, mp.multiplicity);

  const bool ss = r.supersolvable();
  const long long n2 = r.n(2);
  const long long n3 = r.n(3);
  long long points = 0;
  long long pairs = 0;
  long long over4 = 0;
  for (const auto& [k, nk] : r.census) {
    points += nk;
    pairs += static_cast<long long>(nk) * k * (k - 1) / 2;
    if (k > 4) over4 += static_cast<long long>(k - 4) * nk;
  }
  const long long mmax = r.max_multiplicity;
  const long long mmod = r.max_modular_multiplicity;

  auto add = [&r](std::string name, bool applicable, bool pass, double lhs, double rhs) {
    r.checks.push_back({std::move(name), applicable, applicable && pass, lhs, rhs});
  };

  add("eqSum", true, pairs == d * (d - 1) / 2, static_cast<double>(pairs), static_cast<double>(d * (d - 1) / 2));

  {
    const bool applicable = !r.is_pencil && !r.is_near_pencil;
    // 4 * (n2 + 3/4 n3 - d) >= 4 * sum (k-4) n_k
    const bool pass = 4 * n2 + 3 * n3 - 4 * d >= 4 * over4;
    add("hirzebruch", applicable, pass, static_cast<double>(n2) + 0.75 * static_cast<double>(n3) - static_cast<double>(d),
        static_cast<double>(over4));
  }
  {
    const long long rhs = 2 * points - mmax * (d - mmax) - 2;
    add("eqSS", ss, n2 >= rhs, static_cast<double>(n2), static_cast<double>(rhs));
  }
  add("thm1_bound", ss, d <= 3 * mmod - 3, static_cast<double>(d), static_cast<double>(3 * mmod - 3));
  {
    const bool applicable = ss && !r.is_pencil && 2 * mmax >= d;
    const long long bound = -2 * mmax * mmax + (3 * d - 1) * mmax - d * d + d;
    add("thm2B_bound", applicable, n2 >= bound && 2 * bound >= d, static_cast<double>(n2), static_cast<double>(bound));
  }
  add("conj1", ss && !r.is_pencil, 2 * n2 >= d, static_cast<double>(n2), static_cast<double>(d) / 2.0);
  add("conj2", ss && !r.is_pencil, n2 > 0, static_cast<double>(n2), 0.0);
  {
    const long long tau = tjurina_census(lattice);
    const long long formula = tjurina_free(d, mmod - 1, d - mmod);
    add("tjurina", ss, tau == formula, static_cast<double>(tau), static_cast<double>(formula));
  }
  add("thmHH", r.m_homogeneous && *r.m_homogeneous >= 3, r.modular_count <= 4,
      static_cast<double>(r.modular_count), 4.0);
  return r;
}

ClassifyReport check_identities(const Arrangement& arrangement) {
  return check_identities(arrangement, build_lattice(arrangement));
}

}  // namespace ssarr
