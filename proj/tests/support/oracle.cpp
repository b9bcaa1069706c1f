#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include <Eigen/Dense>

#include "ssarr/field.hpp"

namespace oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

double norm3(const NumLine& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2])); }

NumLine unit(NumLine v) {
  const double s = norm3(v);
  for (auto& c : v) c /= s;
  return v;
}

NumLine cross(const NumLine& a, const NumLine& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool same_point(const NumLine& p, const NumLine& q) { return norm3(cross(p, q)) < 1e-8 * norm3(p) * norm3(q); }

// Dense homogeneous polynomial of degree deg in x, y, z, indexed by (i, j).
struct Poly {
  int deg = 0;
  std::map<std::pair<int, int>, Cx> c;  // x^i y^j z^(deg-i-j)
};

Poly multiply_linear(const Poly& f, const NumLine& l) {
  Poly out;
  out.deg = f.deg + 1;
  for (const auto& [ij, v] : f.c) {
    out.c[{ij.first + 1, ij.second}] += v * l[0];
    out.c[{ij.first, ij.second + 1}] += v * l[1];
    out.c[{ij.first, ij.second}] += v * l[2];
  }
  return out;
}

Poly derivative(const Poly& f, int var) {
  Poly out;
  out.deg = f.deg - 1;
  for (const auto& [ij, v] : f.c) {
    const int e[3] = {ij.first, ij.second, f.deg - ij.first - ij.second};
    if (e[var] == 0) continue;
    int i = ij.first, j = ij.second;
    if (var == 0) --i;
    if (var == 1) --j;
    out.c[{i, j}] += v * static_cast<double>(e[var]);
  }
  return out;
}

std::vector<std::pair<int, int>> monos(int r) {
  std::vector<std::pair<int, int>> out;
  for (int i = r; i >= 0; --i)
    for (int j = r - i; j >= 0; --j) out.emplace_back(i, j);
  return out;
}

// Coefficients in lambda of (a0 + lambda a1)^i (b0 + lambda b1)^(p - i).
std::vector<Cx> binomial_expand(Cx a0, Cx a1, Cx b0, Cx b1, int i, int p) {
  std::vector<Cx> out{Cx(1)};
  auto times = [&out](Cx c0, Cx c1) {
    std::vector<Cx> next(out.size() + 1, Cx(0));
    for (std::size_t k = 0; k < out.size(); ++k) {
      next[k] += out[k] * c0;
      next[k + 1] += out[k] * c1;
    }
    out = std::move(next);
  };
  for (int s = 0; s < i; ++s) times(a0, a1);
  for (int s = i; s < p; ++s) times(b0, b1);
  return out;
}

}  // namespace

Cx root_of_unity(int n, long long j) {
  const double angle = 2 * kPi * static_cast<double>(((j % n) + n) % n) / n;
  return {std::cos(angle), std::sin(angle)};
}

Cx to_complex(const ssarr::CycNumber& x) {
  Cx out = 0;
  const auto coeffs = x.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) out += coeffs[i].get_d() * root_of_unity(x.field().order(), static_cast<long long>(i));
  return out;
}

std::vector<NumLine> to_numeric(const ssarr::Arrangement& a) {
  std::vector<NumLine> out;
  for (const auto& l : a.lines()) out.push_back(unit({to_complex(l.coeffs[0]), to_complex(l.coeffs[1]), to_complex(l.coeffs[2])}));
  return out;
}

std::vector<NumLine> full_monomial_lines(int n) {
  std::vector<NumLine> out{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < n; ++i) {
    const Cx z = root_of_unity(n, i);
    out.push_back(unit({1, -z, 0}));
    out.push_back(unit({0, 1, -z}));
    out.push_back(unit({1, 0, -z}));
  }
  return out;
}

std::vector<NumLine> aw_lines(int n, const std::vector<int>& exponents, int u) {
  std::vector<NumLine> out{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < n; ++i) {
    const Cx z = root_of_unity(n, static_cast<long long>(u) * i);
    out.push_back(unit({1, -z, 0}));
    out.push_back(unit({1, 0, -z}));
  }
  for (int e : exponents) out.push_back(unit({0, -root_of_unity(n, static_cast<long long>(u) * e), 1}));
  return out;
}

int find_line(const std::vector<NumLine>& lines, const NumLine& l) {
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (same_point(lines[i], l)) return static_cast<int>(i);
  return -1;
}

std::map<int, int> NumLattice::census() const {
  std::map<int, int> out;
  for (const auto& inc : incidence) ++out[static_cast<int>(inc.size())];
  return out;
}

long long NumLattice::tau() const {
  long long t = 0;
  for (const auto& inc : incidence) t += static_cast<long long>(inc.size() - 1) * static_cast<long long>(inc.size() - 1);
  return t;
}

int NumLattice::n(int k) const {
  const auto c = census();
  const auto it = c.find(k);
  return it == c.end() ? 0 : it->second;
}

std::vector<int> NumLattice::modular() const {
  std::vector<int> out;
  for (std::size_t p = 0; p < incidence.size(); ++p) {
    bool ok = true;
    for (std::size_t q = 0; q < incidence.size() && ok; ++q) {
      if (p == q) continue;
      std::vector<int> common;
      std::set_intersection(incidence[p].begin(), incidence[p].end(), incidence[q].begin(), incidence[q].end(),
                            std::back_inserter(common));
      ok = !common.empty();
    }
    if (ok) out.push_back(static_cast<int>(p));
  }
  return out;
}

int NumLattice::max_mult() const {
  int m = 0;
  for (const auto& inc : incidence) m = std::max(m, static_cast<int>(inc.size()));
  return m;
}

NumLattice numeric_lattice(const std::vector<NumLine>& lines) {
  NumLattice out;
  out.d = static_cast<int>(lines.size());
  std::vector<NumLine> reps;
  std::vector<std::set<int>> members;
  for (int i = 0; i < out.d; ++i) {
    for (int j = i + 1; j < out.d; ++j) {
      const NumLine p = cross(lines[static_cast<std::size_t>(i)], lines[static_cast<std::size_t>(j)]);
      std::size_t k = 0;
      while (k < reps.size() && !same_point(reps[k], p)) ++k;
      if (k == reps.size()) {
        reps.push_back(p);
        members.emplace_back();
      }
      members[k].insert(i);
      members[k].insert(j);
    }
  }
  for (const auto& m : members) out.incidence.emplace_back(m.begin(), m.end());
  std::sort(out.incidence.begin(), out.incidence.end());
  return out;
}

namespace {

std::set<std::vector<int>> big_points(const std::vector<std::vector<int>>& incidence) {
  std::set<std::vector<int>> out;
  for (const auto& inc : incidence)
    if (inc.size() >= 3) out.insert(inc);
  return out;
}

bool brute_iso(int d, const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  if (a.size() != b.size()) return false;
  // Double points are implied by the others, so only compare the rest.
  const auto pa = big_points(a);
  const auto pb = big_points(b);
  if (pa.size() != pb.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& pt : pa) {
      std::vector<int> img;
      for (int l : pt) img.push_back(perm[static_cast<std::size_t>(l)]);
      std::sort(img.begin(), img.end());
      if (!pb.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

bool brute_isomorphic(const NumLattice& a, const NumLattice& b) {
  return a.d == b.d && brute_iso(a.d, a.incidence, b.incidence);
}

bool brute_isomorphic(const ssarr::Lattice& a, const ssarr::Lattice& b) {
  return a.line_count == b.line_count && brute_iso(static_cast<int>(a.line_count), a.incidence, b.incidence);
}

int numeric_rank(const std::vector<std::vector<Cx>>& rows, double rel) {
  if (rows.empty() || rows[0].empty()) return 0;
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel * s(0)) ++rank;
  return rank;
}

int numeric_mdr(const std::vector<NumLine>& lines, int bound) {
  Poly f;
  f.c[{0, 0}] = 1;
  for (const auto& l : lines) f = multiply_linear(f, unit(l));
  const Poly grad[3] = {derivative(f, 0), derivative(f, 1), derivative(f, 2)};
  const int d = f.deg;
  for (int r = 0; r <= bound; ++r) {
    const auto in = monos(r);
    const auto out = monos(r + d - 1);
    std::map<std::pair<int, int>, std::size_t> row_of;
    for (std::size_t i = 0; i < out.size(); ++i) row_of[out[i]] = i;
    std::vector<std::vector<Cx>> rows(out.size(), std::vector<Cx>(3 * in.size(), Cx(0)));
    for (int var = 0; var < 3; ++var) {
      for (std::size_t k = 0; k < in.size(); ++k) {
        for (const auto& [ij, v] : grad[var].c) {
          const std::pair<int, int> prod{ij.first + in[k].first, ij.second + in[k].second};
          rows[row_of.at(prod)][static_cast<std::size_t>(var) * in.size() + k] += v;
        }
      }
    }
    if (numeric_rank(rows) < static_cast<int>(3 * in.size())) return r;
  }
  return -1;
}

NumRestriction numeric_restriction(const std::vector<NumLine>& lines, int h) {
  const NumLine& H = lines[static_cast<std::size_t>(h)];
  int piv = 0;
  for (int c = 1; c < 3; ++c)
    if (std::abs(H[static_cast<std::size_t>(c)]) > std::abs(H[static_cast<std::size_t>(piv)])) piv = c;
  std::array<int, 2> keep{};
  for (int c = 0, k = 0; c < 3; ++c)
    if (c != piv) keep[static_cast<std::size_t>(k++)] = c;
  NumRestriction out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (static_cast<int>(i) == h) continue;
    const NumLine& L = lines[i];
    const Cx ratio = L[static_cast<std::size_t>(piv)] / H[static_cast<std::size_t>(piv)];
    std::array<Cx, 2> form{L[static_cast<std::size_t>(keep[0])] - ratio * H[static_cast<std::size_t>(keep[0])],
                           L[static_cast<std::size_t>(keep[1])] - ratio * H[static_cast<std::size_t>(keep[1])]};
    const double s = std::sqrt(std::norm(form[0]) + std::norm(form[1]));
    form[0] /= s;
    form[1] /= s;
    std::size_t k = 0;
    while (k < out.forms.size() && std::abs(out.forms[k][0] * form[1] - out.forms[k][1] * form[0]) > 1e-8) ++k;
    if (k == out.forms.size()) {
      out.forms.push_back(form);
      out.mult.push_back(0);
    }
    ++out.mult[k];
    ++out.total;
  }
  return out;
}

int numeric_derivation_dim(const NumRestriction& r, int p) {
  const std::size_t cols = 2 * static_cast<std::size_t>(p + 1);
  std::vector<std::vector<Cx>> rows;
  for (std::size_t x = 0; x < r.forms.size(); ++x) {
    const double len = std::sqrt(std::norm(r.forms[x][0]) + std::norm(r.forms[x][1]));
    const Cx a = r.forms[x][0] / len;
    const Cx b = r.forms[x][1] / len;
    // alpha vanishes at (-b, a); w = conj(a, b) is off the line.
    const Cx r0u = -b, r0v = a, wu = std::conj(a), wv = std::conj(b);
    std::vector<std::vector<Cx>> expand;
    for (int i = 0; i <= p; ++i) expand.push_back(binomial_expand(r0u, wu, r0v, wv, i, p));
    for (int k = 0; k < r.mult[x]; ++k) {
      std::vector<Cx> row(cols, Cx(0));
      if (k <= p) {
        for (int i = 0; i <= p; ++i) {
          const Cx e = expand[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
          row[static_cast<std::size_t>(i)] = a * e;
          row[static_cast<std::size_t>(p + 1 + i)] = b * e;
        }
      }
      double size = 0;
      for (const auto& v : row) size += std::norm(v);
      if (size > 0)
        for (auto& v : row) v /= std::sqrt(size);
      rows.push_back(std::move(row));
    }
  }
  return static_cast<int>(cols) - numeric_rank(rows);
}

std::array<int, 2> numeric_exponents(const NumRestriction& r) {
  int prev = 0;
  int d1 = -1;
  for (int p = 0; p <= r.total + 2; ++p) {
    const int dim = numeric_derivation_dim(r, p);
    const int jump = dim - prev;
    if (d1 < 0 && dim > 0) {
      d1 = p;
      if (dim >= 2) return {p, p};
    } else if (d1 >= 0 && jump >= 2) {
      return {d1, p};
    }
    prev = dim;
  }
  return {d1, -1};
}

int numeric_nodal_dim(const std::vector<NumLine>& lines) {
  const int dp = static_cast<int>(lines.size());
  const auto m = monos(dp - 1);
  std::vector<std::vector<Cx>> rows;
  for (int i = 0; i < dp; ++i) {
    for (int j = i + 1; j < dp; ++j) {
      const NumLine p = unit(cross(lines[static_cast<std::size_t>(i)], lines[static_cast<std::size_t>(j)]));
      std::vector<Cx> row;
      for (const auto& [a, b] : m) row.push_back(std::pow(p[0], a) * std::pow(p[1], b) * std::pow(p[2], dp - 1 - a - b));
      rows.push_back(std::move(row));
    }
  }
  return static_cast<int>(m.size()) - numeric_rank(rows);
}

std::vector<int> brute_orbit_min(int n, const std::vector<int>& subset) {
  auto norm = [n](std::vector<int> v) {
    for (auto& e : v) e = ((e % n) + n) % n;
    std::sort(v.begin(), v.end());
    return v;
  };
  std::set<std::vector<int>> seen{norm(subset)};
  std::deque<std::vector<int>> todo{norm(subset)};
  while (!todo.empty()) {
    const auto cur = todo.front();
    todo.pop_front();
    std::vector<int> shifted = cur, negated = cur;
    for (auto& e : shifted) e += 1;
    for (auto& e : negated) e = -e;
    for (auto next : {norm(shifted), norm(negated)}) {
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return *seen.begin();
}

std::set<std::vector<int>> brute_orbits(int n, int k) {
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.insert(brute_orbit_min(n, s));
  }
  return out;
}

std::vector<long long> product_of_cyclotomics(int n) {
  std::vector<long long> acc{1};
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    const auto phi = ssarr::cyclotomic_polynomial(d).coeffs;
    std::vector<long long> next(acc.size() + phi.size() - 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += acc[i] * phi[j];
    acc = std::move(next);
  }
  return acc;
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

ssarr::CycNumber random_number(const ssarr::CycField& field, Rng& rng, long range) {
  std::vector<ssarr::Rational> c;
  for (int i = 0; i < field.degree(); ++i) c.emplace_back(rng.uniform(-range, range), rng.uniform(1, 3));
  for (auto& q : c) q.canonicalize();
  return ssarr::CycNumber(field, std::move(c));
}

ssarr::Matrix3 random_invertible(const ssarr::CycField& field, Rng& rng) {
  for (;;) {
    ssarr::Matrix3 m;
    for (auto& row : m.m)
      for (auto& e : row) e = random_number(field, rng, 3);
    if (!m.determinant().is_zero()) return m;
  }
}

}  // namespace oracle
