#include "ssarr/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ssarr/errors.hpp"

namespace ssarr {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  const auto slash = text.find('/');
  auto digits_only = [&](std::size_t b, std::size_t e) {
    if (b >= e) return false;
    return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(b),
                       text.begin() + static_cast<std::ptrdiff_t>(e),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const std::size_t num_end = slash == std::string::npos ? text.size() : slash;
  if (!digits_only(start, num_end) ||
      (slash != std::string::npos && !digits_only(slash + 1, text.size()))) {
    throw InputError("malformed rational '" + text + "'");
  }
  Rational r;
  std::string body = text[0] == '+' ? text.substr(1) : text;
  if (r.set_str(body, 10) != 0) throw InputError("malformed rational '" + text + "'");
  if (r.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string IntPoly::to_string(char var) const {
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const auto c = coeffs[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const auto mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) out << mag;
    if (k > 0) {
      out << var;
      if (k > 1) out << '^' << k;
    }
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

int euler_phi(int n) {
  if (n < 1) throw InputError("euler_phi requires n >= 1");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

using ZPoly = std::vector<mpz_class>;

// Exact division of a by monic b; throws if the remainder is nonzero.
ZPoly exact_divide_monic(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw InternalError("cyclotomic division degree mismatch");
  ZPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const mpz_class c = a[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  for (const auto& r : a) {
    if (r != 0) throw InternalError("cyclotomic division left a remainder");
  }
  return q;
}

ZPoly cyclotomic_z(int n) {
  ZPoly poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = exact_divide_monic(std::move(poly), cyclotomic_z(d));
  }
  return poly;
}

IntPoly to_int_poly(const ZPoly& p) {
  IntPoly out;
  out.coeffs.reserve(p.size());
  for (const auto& c : p) {
    if (!c.fits_slong_p()) throw InputError("cyclotomic coefficient exceeds 64 bits");
    out.coeffs.push_back(c.get_si());
  }
  return out;
}

// Univariate rational polynomials (ascending) for the extended Euclid.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly sub_scaled_shift(const QPoly& a, const QPoly& b, const Rational& c, std::size_t shift) {
  QPoly out = a;
  if (out.size() < b.size() + shift) out.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) out[i + shift] -= c * b[i];
  trim(out);
  return out;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out = a;
  if (out.size() < b.size()) out.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
  const Rational lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Rational c = r.back() / lead;
    q[shift] += c;
    r = sub_scaled_shift(r, b, c, shift);
  }
  trim(q);
}

}  // namespace

IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw InputError("cyclotomic_polynomial requires n >= 1");
  return to_int_poly(cyclotomic_z(n));
}

struct CycField::Data {
  int order = 1;
  int degree = 1;
  IntPoly modulus;
  // reduction[k - degree] = t^k mod Phi, for degree <= k <= 2*degree - 2.
  std::vector<std::vector<std::int64_t>> reduction;
};

CycField::CycField(int order) {
  if (order < 1) throw InputError("cyclotomic field order must be >= 1");
  auto data = std::make_shared<Data>();
  data->order = order;
  data->modulus = cyclotomic_polynomial(order);
  data->degree = data->modulus.degree();
  const int phi = data->degree;
  // t^phi = -(lower part of Phi); higher powers by shifting.
  std::vector<mpz_class> cur(static_cast<std::size_t>(phi));
  for (int i = 0; i < phi; ++i) cur[static_cast<std::size_t>(i)] = -data->modulus.coeffs[static_cast<std::size_t>(i)];
  for (int k = phi; k <= 2 * phi - 2 || k == phi; ++k) {
    std::vector<std::int64_t> row;
    for (const auto& c : cur) {
      if (!c.fits_slong_p()) throw InputError("cyclotomic reduction table exceeds 64 bits");
      row.push_back(c.get_si());
    }
    data->reduction.push_back(std::move(row));
    // multiply cur by t and reduce
    const mpz_class top = cur.back();
    for (int i = phi - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    cur[0] = 0;
    for (int i = 0; i < phi; ++i) cur[static_cast<std::size_t>(i)] -= top * data->modulus.coeffs[static_cast<std::size_t>(i)];
  }
  data_ = std::move(data);
}

int CycField::order() const noexcept { return data_->order; }
int CycField::degree() const noexcept { return data_->degree; }
const IntPoly& CycField::modulus() const noexcept { return data_->modulus; }

std::span<const std::int64_t> CycField::reduction(int k) const {
  return data_->reduction.at(static_cast<std::size_t>(k - data_->degree));
}

namespace {
const CycField& rational_field() {
  static const CycField field(1);
  return field;
}
}  // namespace

CycNumber::CycNumber() : CycNumber(rational_field()) {}

CycNumber::CycNumber(const CycField& field)
    : field_(field), coeffs_(static_cast<std::size_t>(field.degree()), 0) {}

CycNumber::CycNumber(const CycField& field, const Rational& value) : CycNumber(field) {
  coeffs_[0] = value;
}

CycNumber::CycNumber(const CycField& field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(field.degree())) {
    throw InputError("coefficient vector length " + std::to_string(coeffs_.size()) +
                     " does not match phi(" + std::to_string(field.order()) + ") = " +
                     std::to_string(field.degree()));
  }
  for (auto& c : coeffs_) c.canonicalize();
}

bool CycNumber::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycNumber::is_one() const noexcept {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycNumber::is_rational() const noexcept {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

const Rational& CycNumber::rational_value() const {
  if (!is_rational()) throw InputError("value " + to_string() + " is not rational");
  return coeffs_[0];
}

namespace {

void require_same_field(const CycNumber& a, const CycNumber& b) {
  if (!(a.field() == b.field())) {
    throw ArithmeticError("mixed-field operands: Q(zeta_" + std::to_string(a.field().order()) +
                          ") and Q(zeta_" + std::to_string(b.field().order()) + ")");
  }
}

}  // namespace

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  require_same_field(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
  require_same_field(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  require_same_field(a, b);
  const std::size_t phi = a.coeffs_.size();
  CycNumber out(a.field_);
  if (phi == 1) {
    out.coeffs_[0] = a.coeffs_[0] * b.coeffs_[0];
    return out;
  }
  std::vector<Rational> prod(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  for (std::size_t i = 0; i < phi; ++i) out.coeffs_[i] = std::move(prod[i]);
  for (std::size_t k = phi; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto red = a.field_.reduction(static_cast<int>(k));
    for (std::size_t i = 0; i < phi; ++i) {
      if (red[i] != 0) out.coeffs_[i] += prod[k] * red[i];
    }
  }
  return out;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  *this = *this * o;
  return *this;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  const std::size_t phi = coeffs_.size();
  if (phi == 1) return CycNumber(field_, Rational(1) / coeffs_[0]);
  // Extended Euclid: find s with s * x = 1 mod Phi.
  QPoly r0, r1(coeffs_.begin(), coeffs_.end());
  for (auto c : field_.modulus().coeffs) r0.emplace_back(static_cast<long>(c));
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw InternalError("cyclotomic inverse: non-invertible residue");
  // r1 is a nonzero constant c with s1 * x = c mod Phi.
  const Rational scale = Rational(1) / r1[0];
  QPoly modulus;
  for (auto c : field_.modulus().coeffs) modulus.emplace_back(static_cast<long>(c));
  QPoly quo, red;
  divmod(s1, modulus, quo, red);
  std::vector<Rational> out(phi, 0);
  for (std::size_t i = 0; i < red.size(); ++i) out[i] = red[i] * scale;
  return CycNumber(field_, std::move(out));
}

CycNumber& CycNumber::operator/=(const CycNumber& o) {
  require_same_field(*this, o);
  *this = *this * o.inverse();
  return *this;
}

CycNumber CycNumber::pow(long long e) const {
  CycNumber base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                               : static_cast<unsigned long long>(e);
  CycNumber result(field_, 1);
  while (k > 0) {
    if (k & 1ULL) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const CycNumber& a, const CycNumber& b) {
  if (a.field_.order() != b.field_.order()) return a.field_.order() < b.field_.order();
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::size_t CycNumber::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(field_.order()) * 0x9E3779B97F4A7C15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2); };
  for (const auto& c : coeffs_) {
    mix(mpz_get_ui(c.get_num_mpz_t()));
    mix(static_cast<std::size_t>(mpz_sgn(c.get_num_mpz_t()) + 1));
    mix(mpz_get_ui(c.get_den_mpz_t()));
  }
  return h;
}

std::string CycNumber::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << '*';
      out << 'z';
      if (i > 1) out << '^' << i;
    }
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

CycNumber zeta_pow(const CycField& field, long long j) {
  const long long n = field.order();
  long long e = ((j % n) + n) % n;
  if (e == 0) return CycNumber(field, 1);
  if (field.degree() == 1) {
    // n = 2 and e = 1: zeta_2 = -1.
    return CycNumber(field, -1);
  }
  std::vector<Rational> c(static_cast<std::size_t>(field.degree()), 0);
  if (e < field.degree()) {
    c[static_cast<std::size_t>(e)] = 1;
    return CycNumber(field, std::move(c));
  }
  c[1] = 1;
  return CycNumber(field, std::move(c)).pow(e);
}

std::optional<int> root_order(const CycNumber& x) {
  if (x.is_zero()) return std::nullopt;
  const int n = x.field().order();
  const int group = std::lcm(2, n);
  if (!x.pow(group).is_one()) return std::nullopt;
  for (int e = 1; e <= group; ++e) {
    if (group % e == 0 && x.pow(e).is_one()) return e;
  }
  throw InternalError("root_order: no divisor of the group order annihilates x");
}

}  // namespace ssarr
