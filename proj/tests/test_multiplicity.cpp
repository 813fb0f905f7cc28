#include <gtest/gtest.h>

#include "wlab/multiplicity.hpp"

using namespace wlab;

TEST(MuPlus, Examples) {
  EXPECT_EQ(mu_plus(0, 0, 0, 0), 1);
  EXPECT_EQ(mu_plus(0, 2, 0, 1), 2);
  EXPECT_EQ(mu_plus(0, 0, 1, 1), 0);
  EXPECT_EQ(mu_plus(1, 4, 0, 2), -6);
  EXPECT_EQ(mu_plus(0, 2, 1, 2), 2);
}

TEST(MuMinus, Examples) {
  EXPECT_EQ(mu_minus(0, 0, 1, 1), -2);
  EXPECT_EQ(mu_minus(0, 2, 0, 0), 0);
  EXPECT_EQ(mu_minus(1, 0, 0, 0), -1);
}

TEST(MuPlusSeries, Examples) {
  EXPECT_EQ(mu_plus_series(0, 1, 1), (std::vector<BigInt>{1, 1, 1, 1}));
  EXPECT_EQ(mu_plus_series(0, 0, 0), (std::vector<BigInt>{1}));
  EXPECT_EQ(mu_plus_series(1, 2, 0), (std::vector<BigInt>{-1, -2, -1}));
}

TEST(ComplexWeight, Examples) {
  EXPECT_EQ(complex_weight(2, 0, 1), 2);
  EXPECT_EQ(complex_weight(0, 1, 1), 2);
  EXPECT_EQ(complex_weight(4, 0, 2), 6);
}

TEST(MuPlus, AgreesWithSeriesAndBounds) {
  for (std::uint32_t m = 0; m <= 1; ++m)
    for (std::uint32_t a = 0; a <= 6; ++a)
      for (std::uint32_t b = 0; b <= 6; ++b) {
        const auto series = mu_plus_series(m, a, b);
        ASSERT_EQ(series.size(), a + 2 * b + 1);
        BigInt abs_total = 0;
        for (std::uint32_t k = 0; k < series.size(); ++k) {
          const auto v = mu_plus(m, a, b, k);
          EXPECT_EQ(v, series[k]);
          EXPECT_LE(abs(v), complex_weight(a, b, k));
          abs_total += abs(v);
        }
        EXPECT_EQ(abs_total, pow2(a + b));
        EXPECT_EQ(mu_plus(m, a, b, a + 2 * b + 1), 0);
      }
}

TEST(MuMinus, SupportedOnlyOnPurelyConjugateFullTangency) {
  for (std::uint32_t m = 0; m <= 1; ++m)
    for (std::uint32_t a = 0; a <= 4; ++a)
      for (std::uint32_t b = 0; b <= 4; ++b)
        for (std::uint32_t k = 0; k <= a + 2 * b; ++k) {
          const auto v = mu_minus(m, a, b, k);
          if (a == 0 && k == b) {
            EXPECT_EQ(abs(v), pow2(b));
            EXPECT_EQ(v.sign(), (m + b) % 2 == 0 ? 1 : -1);
          } else {
            EXPECT_EQ(v, 0);
          }
        }
}

TEST(CurveRecord, Validation) {
  CurveRecord c;
  c.mass = 1;
  c.mass_in_s = 2;
  EXPECT_THROW(c.validate(), InputError);
  c.mass_in_s = 0;
  c.count = 0;
  EXPECT_THROW(c.validate(), InputError);
}
