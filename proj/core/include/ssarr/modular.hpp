#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ssarr/field.hpp"

namespace ssarr {

/// Z/p together with an element of exact multiplicative order n, i.e. a
/// root of Phi_n mod p. Reduction Q(zeta_n) -> Z/p sends zeta_n to omega.
struct PrimeImage {
  std::uint64_t p = 0;
  std::uint64_t omega = 1;
  int order = 1;
};

bool is_prime_u64(std::uint64_t n);

/// The index-th prime p < 2^62 (counting down) with p = 1 mod n, and a
/// primitive n-th root of unity in Z/p.
PrimeImage prime_image(int order, int index);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// nullopt when a denominator is divisible by p.
std::optional<std::uint64_t> reduce(const CycNumber& x, const PrimeImage& image);

/// Dense matrix over Z/p.
struct ModMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> data;

  ModMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::uint64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

/// Row indices R and column indices C (both increasing, |R| = |C| = rank)
/// such that the R x C submatrix is invertible mod p.
struct RankProfile {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::size_t rank() const { return cols.size(); }
};

RankProfile rank_profile(ModMatrix m, std::uint64_t p);

}  // namespace ssarr
