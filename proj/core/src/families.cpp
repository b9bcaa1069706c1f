#include "ssarr/families.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ssarr/errors.hpp"

namespace ssarr {

namespace {

ProjLine line(const CycNumber& a, const CycNumber& b, const CycNumber& c) {
  return ProjLine::make(Triple{a, b, c});
}

std::vector<ProjLine> monomial_core(const CycField& field, int n) {
  const CycNumber zero(field), one(field, 1);
  std::vector<ProjLine> lines{line(one, zero, zero), line(zero, one, zero), line(zero, zero, one)};
  for (int i = 0; i < n; ++i) lines.push_back(line(one, -zeta_pow(field, i), zero));  // x - zeta^i y
  for (int i = 0; i < n; ++i) lines.push_back(line(one, zero, -zeta_pow(field, i)));  // x - zeta^i z
  return lines;
}

long small_int(std::mt19937_64& rng, long bound) {
  return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
}

}  // namespace

Arrangement full_monomial(int n) {
  if (n < 1) throw InputError("full_monomial requires n >= 1");
  const CycField field(n);
  auto lines = monomial_core(field, n);
  const CycNumber zero(field), one(field, 1);
  for (int i = 0; i < n; ++i) lines.push_back(line(zero, one, -zeta_pow(field, i)));  // y - zeta^i z
  return Arrangement(field, std::move(lines));
}

Arrangement a_of_w(int n, const std::vector<CycNumber>& w) {
  if (n < 1) throw InputError("a_of_w requires n >= 1");
  if (w.size() > static_cast<std::size_t>(n)) throw InputError("a_of_w requires k <= n");
  const CycField field(n);
  std::set<CycNumber> seen;
  for (const auto& wj : w) {
    if (!(wj.field() == field)) throw InputError("w_j must lie in Q(zeta_" + std::to_string(n) + ")");
    if (!wj.pow(n).is_one()) throw InputError("w_j = " + wj.to_string() + " is not an n-th root of unity");
    if (!seen.insert(wj).second) throw InputError("repeated w_j = " + wj.to_string());
  }
  auto lines = monomial_core(field, n);
  const CycNumber zero(field), one(field, 1);
  for (const auto& wj : w) lines.push_back(line(zero, -wj, one));  // z - w_j y
  return Arrangement(field, std::move(lines));
}

Arrangement a_of_w(int n, const std::vector<int>& exponents) {
  if (n < 1) throw InputError("a_of_w requires n >= 1");
  const CycField field(n);
  std::vector<CycNumber> w;
  for (int e : exponents) {
    if (e < 0 || e >= n) throw InputError("exponent " + std::to_string(e) + " outside [0, n)");
    w.push_back(zeta_pow(field, e));
  }
  return a_of_w(n, w);
}

Arrangement pencil(int d) {
  if (d < 2) throw InputError("pencil requires d >= 2");
  const CycField field(1);
  std::vector<ProjLine> lines;
  lines.push_back(ProjLine::make(field, 0, 1, 0));
  for (int t = 0; t < d - 1; ++t) lines.push_back(ProjLine::make(field, 1, t, 0));
  return Arrangement(field, std::move(lines));
}

Arrangement near_pencil(int d) {
  if (d < 3) throw InputError("near_pencil requires d >= 3");
  auto lines = pencil(d - 1).lines();
  lines.push_back(ProjLine::make(CycField(1), 0, 0, 1));
  return Arrangement(CycField(1), std::move(lines));
}

bool is_generic_arrangement(const Lattice& lattice) {
  return std::all_of(lattice.mult.begin(), lattice.mult.end(), [](int m) { return m == 2; });
}

Arrangement generic_arrangement(int dprime, std::uint64_t seed) {
  if (dprime < 3) throw InputError("generic_arrangement requires d' >= 3");
  const CycField field(1);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<ProjLine> lines;
    std::set<ProjLine> seen;
    while (lines.size() < static_cast<std::size_t>(dprime)) {
      const long a = small_int(rng, 7), b = small_int(rng, 7), c = small_int(rng, 7);
      if (a == 0 && b == 0 && c == 0) continue;
      auto l = ProjLine::make(field, a, b, c);
      if (seen.insert(l).second) lines.push_back(std::move(l));
    }
    Arrangement arr(field, std::move(lines));
    if (is_generic_arrangement(build_lattice(arr))) return arr;
  }
  throw InputError("could not certify a generic arrangement after 1000 attempts");
}

namespace {

// Lines joining two base points that do not already share a base line.
std::vector<ProjLine> connecting_lines(const Lattice& lat) {
  std::set<ProjLine> out;
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (std::size_t b = a + 1; b < lat.size(); ++b) {
      std::vector<int> common;
      std::set_intersection(lat.incidence[a].begin(), lat.incidence[a].end(), lat.incidence[b].begin(),
                            lat.incidence[b].end(), std::back_inserter(common));
      if (common.empty()) out.insert(line_through(lat.points[a], lat.points[b]));
    }
  }
  return {out.begin(), out.end()};
}

bool on_any(const std::vector<ProjLine>& lines, const ProjPoint& p) {
  return std::any_of(lines.begin(), lines.end(), [&](const ProjLine& l) { return l.contains(p); });
}

}  // namespace

ProjPoint generic_vertex(const Arrangement& base, std::uint64_t seed) {
  const Lattice lat = build_lattice(base);
  const auto joins = connecting_lines(lat);
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  const CycField& field = base.field();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const ProjPoint p = ProjPoint::make(field, small_int(rng, 25), small_int(rng, 25), 1);
    if (on_any(base.lines(), p) || on_any(joins, p)) continue;
    return p;
  }
  throw InputError("could not certify a generic vertex after 1000 attempts");
}

std::optional<ProjPoint> adversarial_vertex(const Arrangement& base, std::uint64_t seed) {
  const Lattice lat = build_lattice(base);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (std::size_t b = a + 1; b < lat.size(); ++b) {
      std::vector<int> common;
      std::set_intersection(lat.incidence[a].begin(), lat.incidence[a].end(), lat.incidence[b].begin(),
                            lat.incidence[b].end(), std::back_inserter(common));
      if (common.empty()) pairs.emplace_back(a, b);
    }
  }
  if (pairs.empty()) return std::nullopt;
  std::mt19937_64 rng(seed ^ 0x27d4eb2fULL);
  const auto [a, b] = pairs[rng() % pairs.size()];
  const CycField& field = base.field();
  const Triple& qa = lat.points[a].coords;
  const Triple& qb = lat.points[b].coords;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const long s = small_int(rng, 9), t = small_int(rng, 9);
    if (s == 0 || t == 0) continue;
    Triple raw;
    for (std::size_t i = 0; i < 3; ++i) raw[i] = CycNumber(field, s) * qa[i] + CycNumber(field, t) * qb[i];
    const ProjPoint p = ProjPoint::make(raw);
    if (on_any(base.lines(), p)) continue;
    return p;
  }
  return std::nullopt;
}

Cone cone(const ConeSpec& spec) {
  const Arrangement& base = spec.base;
  if (spec.extra < 0) throw InputError("cone requires e >= 0");
  if (!(spec.vertex.field() == base.field())) throw InputError("cone vertex is over a different field");
  if (base.size() < 2) throw InputError("cone base needs at least two lines");
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i].contains(spec.vertex)) {
      throw InputError("cone vertex " + spec.vertex.to_string() + " lies on base line " + std::to_string(i));
    }
  }
  const Lattice base_lat = build_lattice(base);
  std::vector<ProjLine> lines = base.lines();
  std::set<ProjLine> added;
  for (const auto& q : base_lat.points) {
    ProjLine l = line_through(spec.vertex, q);
    if (added.insert(l).second) lines.push_back(std::move(l));
  }
  const int cone_lines = static_cast<int>(added.size());

  std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  const CycField& field = base.field();
  for (int e = 0; e < spec.extra; ++e) {
    const Lattice lat = build_lattice(Arrangement(field, lines));
    const std::set<ProjLine> present(lines.begin(), lines.end());
    bool placed = false;
    for (int attempt = 0; attempt < 2000 && !placed; ++attempt) {
      const long bound = 3 + attempt / 50;
      const ProjPoint r = [&] {
        while (true) {
          const long a = small_int(rng, bound), b = small_int(rng, bound), c = small_int(rng, bound);
          if (a != 0 || b != 0 || c != 0) return ProjPoint::make(field, a, b, c);
        }
      }();
      if (r == spec.vertex) continue;
      ProjLine candidate = line_through(spec.vertex, r);
      if (present.count(candidate) != 0) continue;
      bool clean = true;
      for (const auto& p : lat.points) {
        if (p != spec.vertex && candidate.contains(p)) {
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      lines.push_back(std::move(candidate));
      placed = true;
    }
    if (!placed) throw InputError("could not place extra cone line " + std::to_string(e + 1));
  }
  return Cone{Arrangement(field, std::move(lines)), static_cast<int>(base.size()), cone_lines, spec.extra,
              spec.vertex};
}

}  // namespace ssarr
