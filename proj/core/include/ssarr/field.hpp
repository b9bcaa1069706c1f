#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ssarr {

/// Arbitrary precision rational. gmpxx keeps values canonical (reduced,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q". Throws InputError on malformed text or q = 0.
Rational parse_rational(const std::string& text);

/// Always "p/q", including integers ("3/1") and zero ("0/1").
std::string format_rational(const Rational& r);

/// Dense integer polynomial, coefficients in ascending degree order.
struct IntPoly {
  std::vector<std::int64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::string to_string(char var = 't') const;
  friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

int euler_phi(int n);

/// The n-th cyclotomic polynomial, obtained by dividing t^n - 1 by the
/// cyclotomic polynomials of the proper divisors of n.
IntPoly cyclotomic_polynomial(int n);

/// The field Q(zeta_n) presented as Q[t]/(Phi_n). Order 1 is plain Q.
/// Cheap to copy; the modulus and reduction table are shared and immutable.
class CycField {
 public:
  explicit CycField(int order = 1);

  int order() const noexcept;
  int degree() const noexcept;
  const IntPoly& modulus() const noexcept;

  /// Coefficients of t^k mod Phi_n for degree() <= k <= 2*degree() - 2.
  std::span<const std::int64_t> reduction(int k) const;

  friend bool operator==(const CycField& a, const CycField& b) noexcept {
    return a.order() == b.order();
  }

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Element of Q(zeta_n): coefficients of 1, zeta, ..., zeta^(phi(n)-1).
class CycNumber {
 public:
  /// Rational zero.
  CycNumber();
  explicit CycNumber(const CycField& field);
  CycNumber(const CycField& field, const Rational& value);
  CycNumber(const CycField& field, long value) : CycNumber(field, Rational(value)) {}
  CycNumber(const CycField& field, int value) : CycNumber(field, Rational(value)) {}
  /// Takes a coefficient vector of length exactly phi(n).
  CycNumber(const CycField& field, std::vector<Rational> coeffs);

  const CycField& field() const noexcept { return field_; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  /// Throws InputError unless is_rational().
  const Rational& rational_value() const;

  CycNumber inverse() const;
  CycNumber pow(long long e) const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator/=(const CycNumber& o);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }

  /// Structural equality; operands from different fields compare unequal.
  friend bool operator==(const CycNumber& a, const CycNumber& b);
  /// Total order (field order, then coefficients lexicographically).
  /// Used only for canonical sorting, carries no arithmetic meaning.
  friend bool operator<(const CycNumber& a, const CycNumber& b);

  std::size_t hash() const noexcept;
  /// Human readable, e.g. "1/2 - 3*z + z^2".
  std::string to_string() const;

 private:
  CycField field_;
  std::vector<Rational> coeffs_;
};

/// zeta_n^j reduced mod Phi_n; j may be negative.
CycNumber zeta_pow(const CycField& field, long long j);

/// Smallest e >= 1 with x^e = 1, or nullopt when x is not a root of unity.
/// Roots of unity in Q(zeta_n) form the cyclic group of order lcm(2, n).
std::optional<int> root_order(const CycNumber& x);

struct CycNumberHash {
  std::size_t operator()(const CycNumber& x) const noexcept { return x.hash(); }
};

}  // namespace ssarr
