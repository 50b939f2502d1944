#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rews/formulas.hpp"

namespace rews {
namespace {

// Balanced-count formula evaluated in plain 64-bit arithmetic, n <= 6.
std::uint64_t balanced_oracle(unsigned n) {
  std::uint64_t twice = 0;
  for (unsigned k = 1; k < n; ++k) {
    const unsigned rest = 1u << (n - k);
    const std::uint64_t bracket = (std::uint64_t{1} << rest) - oracle::binom(rest, rest / 2) / 2;
    twice += oracle::binom(n, k) * oracle::binom(1u << k, 1u << (k - 1)) * bracket;
  }
  return twice / 2;
}

TEST(FormulasTest, Binomial) {
  EXPECT_EQ(binomial(16, 2), 120);
  EXPECT_EQ(binomial(4, 5), 0);
  EXPECT_EQ(binomial(64, 32), BigInt("1832624140942590534"));
  EXPECT_EQ(pow2(100), BigInt("1267650600228229401496703205376"));
}

TEST(FormulasTest, FullySeparable) {
  EXPECT_EQ(count_fully_separable_formula(2), 8);
  EXPECT_EQ(count_fully_separable_formula(3), 16);
  EXPECT_EQ(count_fully_separable_formula(4), 32);
  EXPECT_EQ(count_fully_separable_formula(60), pow2(61));
}

TEST(FormulasTest, TwoSeparableBalanced) {
  for (unsigned n = 2; n <= 6; ++n) EXPECT_EQ(count_two_separable_balanced_formula(n), balanced_oracle(n));
  EXPECT_EQ(count_two_separable_balanced_formula(2), 6);
  EXPECT_EQ(count_two_separable_balanced_formula(3), 66);
  EXPECT_EQ(count_two_separable_balanced_formula(4), 1538);
  EXPECT_EQ(count_two_separable_balanced_formula(5), 403210);
  EXPECT_THROW(count_two_separable_balanced_formula(1), RangeError);
  // Large n stays exact.
  EXPECT_GT(count_two_separable_balanced_formula(12), pow2(2048));
}

TEST(FormulasTest, TwoSeparableClassD) {
  EXPECT_EQ(count_two_separable_classD_formula(3, 2), 12);
  EXPECT_EQ(count_two_separable_classD_formula(4, 2), 32);
  EXPECT_EQ(count_two_separable_classD_formula(5, 4), 5 * 120);
  EXPECT_THROW(count_two_separable_classD_formula(4, 4), DomainError);
  EXPECT_THROW(count_two_separable_classD_formula(4, 3), DomainError);
  EXPECT_THROW(count_two_separable_classD_formula(4, 17), DomainError);
}

TEST(FormulasTest, EntangledFraction) {
  const auto a = entangled_fraction_report(4, 14);
  EXPECT_EQ(a.ratio_text(), "32/120");
  EXPECT_EQ(a.ratio, Rational(32, 120));
  const auto b = entangled_fraction_report(5, 30);
  EXPECT_EQ(b.ratio_text(), "80/496");
  EXPECT_EQ(entangled_fraction_report(4, 2).ratio, a.ratio);
  EXPECT_THROW(entangled_fraction_report(4, 8), DomainError);
  EXPECT_THROW(entangled_fraction_report(4, 6), DomainError);
}

TEST(FormulasTest, FractionSeriesDecreases) {
  const auto s = entangled_fraction_series(4, 10, 2);
  ASSERT_EQ(s.points.size(), 7u);
  EXPECT_TRUE(s.strictly_decreasing);
  // n B(2^(n-1), 1) / B(2^n, 2) = n / (2^n - 1).
  for (const auto& p : s.points) EXPECT_EQ(p.ratio, Rational(p.n, (1 << p.n) - 1));
}

}  // namespace
}  // namespace rews
