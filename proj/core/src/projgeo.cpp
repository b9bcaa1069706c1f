#include "ssarr/projgeo.hpp"

#include <algorithm>
#include <sstream>

#include "ssarr/errors.hpp"

namespace ssarr {

namespace {

Triple normalize(const Triple& raw, const char* what) {
  const CycField& field = raw[0].field();
  for (const auto& c : raw) {
    if (!(c.field() == field)) throw ArithmeticError(std::string(what) + " with mixed-field coordinates");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (raw[i].is_zero()) continue;
    if (raw[i].is_one()) return raw;
    const CycNumber inv = raw[i].inverse();
    Triple out = raw;
    out[i] = CycNumber(field, 1);
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!out[j].is_zero()) out[j] *= inv;
    }
    return out;
  }
  throw InputError(std::string(what) + " with all coordinates zero");
}

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::string triple_string(const Triple& t) {
  std::ostringstream out;
  out << '(' << t[0].to_string() << " : " << t[1].to_string() << " : " << t[2].to_string() << ')';
  return out.str();
}

}  // namespace

ProjPoint ProjPoint::make(const Triple& raw) { return ProjPoint{normalize(raw, "point")}; }

ProjPoint ProjPoint::make(const CycField& field, long x, long y, long z) {
  return make(Triple{CycNumber(field, x), CycNumber(field, y), CycNumber(field, z)});
}

std::string ProjPoint::to_string() const { return triple_string(coords); }

ProjLine ProjLine::make(const Triple& raw) { return ProjLine{normalize(raw, "line")}; }

ProjLine ProjLine::make(const CycField& field, long cx, long cy, long cz) {
  return make(Triple{CycNumber(field, cx), CycNumber(field, cy), CycNumber(field, cz)});
}

CycNumber ProjLine::evaluate(const Triple& v) const {
  CycNumber acc(field());
  for (std::size_t i = 0; i < 3; ++i) {
    if (!coeffs[i].is_zero() && !v[i].is_zero()) acc += coeffs[i] * v[i];
  }
  return acc;
}

int ProjLine::pivot() const {
  for (int i = 0; i < 3; ++i) {
    if (!coeffs[static_cast<std::size_t>(i)].is_zero()) return i;
  }
  throw InternalError("normalized line with zero coefficients");
}

std::string ProjLine::to_string() const { return "[" + triple_string(coeffs) + "]"; }

ProjPoint line_intersect(const ProjLine& l1, const ProjLine& l2) {
  if (l1 == l2) throw InputError("coincident lines");
  return ProjPoint::make(cross(l1.coeffs, l2.coeffs));
}

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw InputError("line_through: points coincide");
  return ProjLine::make(cross(p.coords, q.coords));
}

Matrix3 Matrix3::identity(const CycField& field) {
  Matrix3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out.m[i][j] = CycNumber(field, i == j ? 1 : 0);
  return out;
}

Matrix3 Matrix3::from_columns(const Triple& c0, const Triple& c1, const Triple& c2) {
  Matrix3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.m[i][0] = c0[i];
    out.m[i][1] = c1[i];
    out.m[i][2] = c2[i];
  }
  return out;
}

CycNumber Matrix3::determinant() const {
  const auto& a = m;
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Matrix3 Matrix3::inverse() const {
  const CycNumber det = determinant();
  if (det.is_zero()) throw InputError("singular transform");
  const CycNumber inv = det.inverse();
  const auto& a = m;
  Matrix3 out;
  // Adjugate, transposed cofactors.
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      out.m[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) * inv;
    }
  }
  return out;
}

Triple Matrix3::apply(const Triple& v) const {
  Triple out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  }
  return out;
}

Triple Matrix3::apply_left(const Triple& row) const {
  Triple out;
  for (std::size_t j = 0; j < 3; ++j) {
    out[j] = row[0] * m[0][j] + row[1] * m[1][j] + row[2] * m[2][j];
  }
  return out;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] + a.m[i][2] * b.m[2][j];
  return out;
}

Arrangement::Arrangement(const CycField& field, std::vector<ProjLine> lines)
    : field_(field), lines_(std::move(lines)) {
  if (lines_.empty()) throw InputError("arrangement must contain at least one line");
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (!(lines_[i].field() == field_)) {
      throw InputError("line " + std::to_string(i) + " is not over Q(zeta_" +
                       std::to_string(field_.order()) + ")");
    }
    // Re-normalize in case the caller built the struct by hand.
    lines_[i] = ProjLine::make(lines_[i].coeffs);
    if (!index_.emplace(lines_[i], i).second) {
      throw InputError("duplicate line " + lines_[i].to_string() + " at index " + std::to_string(i));
    }
  }
}

std::optional<std::size_t> Arrangement::index_of(const ProjLine& line) const {
  auto it = index_.find(line);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Lattice::max_multiplicity() const {
  return mult.empty() ? 0 : *std::max_element(mult.begin(), mult.end());
}

namespace {

long long choose2(long long k) { return k * (k - 1) / 2; }

void finish_lattice(Lattice& lat) {
  const std::size_t d = lat.line_count;
  lat.mult.clear();
  lat.points_on_line.assign(d, {});
  lat.meet.assign(d * d, -1);
  long long pairs = 0;
  for (std::size_t p = 0; p < lat.incidence.size(); ++p) {
    auto& inc = lat.incidence[p];
    std::sort(inc.begin(), inc.end());
    if (inc.size() < 2) throw InternalError("lattice point with fewer than two lines");
    lat.mult.push_back(static_cast<int>(inc.size()));
    pairs += choose2(static_cast<long long>(inc.size()));
    for (int l : inc) lat.points_on_line[static_cast<std::size_t>(l)].push_back(static_cast<int>(p));
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        const auto i = static_cast<std::size_t>(inc[a]);
        const auto j = static_cast<std::size_t>(inc[b]);
        if (lat.meet[i * d + j] != -1) throw InternalError("two lines meet in two lattice points");
        lat.meet[i * d + j] = lat.meet[j * d + i] = static_cast<int>(p);
      }
    }
  }
  if (pairs != choose2(static_cast<long long>(d))) {
    throw InternalError("lattice violates sum C(m_p,2) = C(d,2)");
  }
}

}  // namespace

Lattice build_lattice(const Arrangement& arrangement) {
  const std::size_t d = arrangement.size();
  if (d < 2) throw InputError("build_lattice requires at least two lines");
  Lattice lat;
  lat.line_count = d;
  std::map<ProjPoint, std::size_t> seen;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      ProjPoint p = line_intersect(arrangement[i], arrangement[j]);
      auto [it, inserted] = seen.emplace(p, lat.points.size());
      if (inserted) {
        lat.points.push_back(std::move(p));
        lat.incidence.emplace_back();
      }
      auto& inc = lat.incidence[it->second];
      for (int l : {static_cast<int>(i), static_cast<int>(j)}) {
        if (std::find(inc.begin(), inc.end(), l) == inc.end()) inc.push_back(l);
      }
    }
  }
  finish_lattice(lat);
  return lat;
}

Lattice lattice_from_incidence(std::size_t line_count, std::vector<std::vector<int>> incidence) {
  Lattice lat;
  lat.line_count = line_count;
  lat.incidence = std::move(incidence);
  for (const auto& inc : lat.incidence) {
    for (int l : inc) {
      if (l < 0 || static_cast<std::size_t>(l) >= line_count) throw InputError("incidence index out of range");
    }
  }
  finish_lattice(lat);
  return lat;
}

Census census(const Lattice& lattice) {
  Census out;
  long long pairs = 0;
  for (int k : lattice.mult) {
    ++out[k];
    pairs += choose2(k);
  }
  if (pairs != choose2(static_cast<long long>(lattice.line_count))) {
    throw InternalError("census violates sum n_k C(k,2) = C(d,2)");
  }
  return out;
}

Arrangement apply_transform(const Arrangement& arrangement, const Matrix3& transform) {
  if (transform.determinant().is_zero()) throw InputError("singular transform");
  std::vector<ProjLine> lines;
  lines.reserve(arrangement.size());
  for (const auto& l : arrangement.lines()) lines.push_back(ProjLine::make(transform.apply_left(l.coeffs)));
  return Arrangement(arrangement.field(), std::move(lines));
}

}  // namespace ssarr
