#include "ssarr/modular.hpp"

#include <algorithm>
#include <utility>

#include "ssarr/errors.hpp"

namespace ssarr {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw ArithmeticError("inverse of zero mod p");
  return pow_mod(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : small) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a proven deterministic witness set below 2^64.
  for (auto a : small) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

PrimeImage prime_image(int order, int index) {
  if (order < 1 || index < 0) throw InputError("prime_image requires order >= 1 and index >= 0");
  const auto n = static_cast<std::uint64_t>(order);
  std::uint64_t candidate = ((std::uint64_t{1} << 62) - 1) / n * n + 1;
  if (candidate >= (std::uint64_t{1} << 62)) candidate -= n;
  int seen = 0;
  for (;; candidate -= n) {
    if (!is_prime_u64(candidate)) continue;
    if (seen++ < index) continue;
    break;
  }
  PrimeImage image{candidate, 1, order};
  if (order == 1) return image;
  const auto factors = prime_factors(n);
  for (std::uint64_t g = 2;; ++g) {
    const std::uint64_t w = pow_mod(g, (candidate - 1) / n, candidate);
    bool primitive = w != 1;
    for (auto q : factors) {
      if (pow_mod(w, n / q, candidate) == 1) primitive = false;
    }
    if (primitive) {
      image.omega = w;
      return image;
    }
  }
}

std::optional<std::uint64_t> reduce(const CycNumber& x, const PrimeImage& image) {
  const std::uint64_t p = image.p;
  std::uint64_t acc = 0, power = 1;
  for (const auto& c : x.coeffs()) {
    if (c != 0) {
      const std::uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
      if (den == 0) return std::nullopt;
      const std::uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
      acc = (acc + mul_mod(mul_mod(num, inv_mod(den, p), p), power, p)) % p;
    }
    power = mul_mod(power, image.omega, p);
  }
  return acc;
}

RankProfile rank_profile(ModMatrix m, std::uint64_t p) {
  RankProfile out;
  std::vector<std::size_t> row_id(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) row_id[r] = r;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t found = m.rows;
    for (std::size_t r = row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found == m.rows) continue;
    if (found != row) {
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(found, c));
      std::swap(row_id[row], row_id[found]);
    }
    const std::uint64_t inv = inv_mod(m.at(row, col), p);
    for (std::size_t r = row + 1; r < m.rows; ++r) {
      if (m.at(r, col) == 0) continue;
      const std::uint64_t factor = mul_mod(m.at(r, col), inv, p);
      for (std::size_t c = col; c < m.cols; ++c) {
        if (m.at(row, c) == 0) continue;
        m.at(r, c) = (m.at(r, c) + p - mul_mod(factor, m.at(row, c), p)) % p;
      }
    }
    out.cols.push_back(col);
    out.rows.push_back(row_id[row]);
    ++row;
  }
  std::sort(out.rows.begin(), out.rows.end());
  return out;
}

}  // namespace ssarr
