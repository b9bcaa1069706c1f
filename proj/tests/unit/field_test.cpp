#include <gtest/gtest.h>

#include "oracle.hpp"
#include "ssarr/errors.hpp"
#include "ssarr/field.hpp"

using namespace ssarr;

namespace {

IntPoly poly(std::vector<std::int64_t> c) { return IntPoly{std::move(c)}; }

}  // namespace

TEST(Cyclotomic, SmallOrders) {
  EXPECT_EQ(cyclotomic_polynomial(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), poly({1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), poly({1, -1, 1}));
}

TEST(Cyclotomic, ProductOverDivisorsIsTnMinusOne) {
  for (int n = 1; n <= 30; ++n) {
    const auto prod = oracle::product_of_cyclotomics(n);
    std::vector<long long> want(static_cast<std::size_t>(n + 1), 0);
    want[0] = -1;
    want[static_cast<std::size_t>(n)] = 1;
    EXPECT_EQ(prod, want) << "n=" << n;
    EXPECT_EQ(cyclotomic_polynomial(n).degree(), euler_phi(n)) << "n=" << n;
  }
}

TEST(Cyclotomic, PrimitiveRootIsAZero) {
  for (int n = 1; n <= 24; ++n) {
    const auto c = cyclotomic_polynomial(n).coeffs;
    oracle::Cx v = 0;
    for (std::size_t i = 0; i < c.size(); ++i) v += static_cast<double>(c[i]) * oracle::root_of_unity(n, static_cast<long long>(i));
    EXPECT_LT(std::abs(v), 1e-9) << "n=" << n;
  }
}

TEST(FieldOps, Examples) {
  const CycField f4(4), f3(3), f6(6);
  EXPECT_EQ(zeta_pow(f4, 1) * zeta_pow(f4, 1), CycNumber(f4, -1));
  EXPECT_EQ(zeta_pow(f3, 1) + zeta_pow(f3, 2), CycNumber(f3, -1));
  EXPECT_EQ(zeta_pow(f6, 1).inverse(), zeta_pow(f6, 5));
  EXPECT_TRUE((zeta_pow(f6, 1) * zeta_pow(f6, 5)).is_one());
}

TEST(FieldOps, ZetaPow) {
  EXPECT_TRUE(zeta_pow(CycField(5), 0).is_one());
  EXPECT_EQ(zeta_pow(CycField(2), 1), CycNumber(CycField(2), -1));
  EXPECT_EQ(zeta_pow(CycField(6), 3), CycNumber(CycField(6), -1));
  EXPECT_EQ(zeta_pow(CycField(7), -1), zeta_pow(CycField(7), 6));
}

TEST(FieldOps, RootOrder) {
  EXPECT_EQ(root_order(CycNumber(CycField(1), 1)), 1);
  EXPECT_EQ(root_order(zeta_pow(CycField(6), 2)), 3);
  EXPECT_EQ(root_order(CycNumber(CycField(1), 2)), std::nullopt);
  EXPECT_EQ(root_order(-zeta_pow(CycField(3), 1)), 6);
  EXPECT_EQ(root_order(CycNumber(CycField(5))), std::nullopt);
}

TEST(FieldOps, Errors) {
  EXPECT_THROW(CycNumber(CycField(3)).inverse(), ArithmeticError);
  EXPECT_THROW(CycNumber(CycField(3), 1) + CycNumber(CycField(4), 1), ArithmeticError);
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
  EXPECT_EQ(format_rational(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(format_rational(Rational(3)), "3/1");
}

// Field axioms and the complex embedding, on random elements.
TEST(FieldProperty, AxiomsAndEmbedding) {
  oracle::Rng rng(11);
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 12}) {
    const CycField f(n);
    for (int trial = 0; trial < 25; ++trial) {
      const CycNumber a = oracle::random_number(f, rng), b = oracle::random_number(f, rng),
                      c = oracle::random_number(f, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
        EXPECT_EQ(b / a * a, b);
      }
      EXPECT_LT(std::abs(oracle::to_complex(a * b) - oracle::to_complex(a) * oracle::to_complex(b)),
                1e-9 * (1 + std::abs(oracle::to_complex(a)) * std::abs(oracle::to_complex(b))));
      EXPECT_EQ(a.pow(3), a * a * a);
    }
  }
}

TEST(FieldProperty, RootsOfUnityHaveOrderLcm2n) {
  for (int n = 1; n <= 12; ++n) {
    const CycField f(n);
    const int big = n % 2 ? 2 * n : n;
    int seen = 0;
    for (int j = 0; j < n; ++j) {
      for (int s : {1, -1}) {
        const auto o = root_order(zeta_pow(f, j) * CycNumber(f, s));
        ASSERT_TRUE(o.has_value());
        EXPECT_EQ(big % *o, 0);
        if (*o == big) ++seen;
      }
    }
    EXPECT_GT(seen, 0) << "n=" << n;
  }
}
