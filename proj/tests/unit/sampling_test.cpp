#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "rews/sampling.hpp"

namespace rews {
namespace {

TEST(SamplingTest, Deterministic) {
  EXPECT_EQ(sample_random(3, 50, 42), sample_random(3, 50, 42));
  EXPECT_EQ(sample_random(9, 5, 42), sample_random(9, 5, 42));
  EXPECT_NE(sample_random(3, 50, 42), sample_random(3, 50, 43));
}

TEST(SamplingTest, Shape) {
  const auto states = sample_random(3, 10, 7);
  ASSERT_EQ(states.size(), 10u);
  for (const auto& r : states) EXPECT_EQ(r.dimension(), 8u);
  EXPECT_THROW(sample_random(17, 1, 0), RangeError);
}

TEST(SamplingTest, RandomAccessMatchesStream) {
  const auto states = sample_random(7, 20, 11);
  for (std::uint64_t i = 0; i < states.size(); ++i) EXPECT_EQ(sample_state(7, 11, i), states[i]);
}

TEST(SamplingTest, CounterRng) {
  const CounterRng rng(1);
  EXPECT_EQ(rng.at(5), CounterRng(1).at(5));
  EXPECT_NE(rng.at(5), rng.at(6));
  for (std::uint64_t c = 0; c < 1000; ++c) EXPECT_LT(rng.uniform(c, 7), 7u);
  // SplitMix64 reference: seed 0 gives 0xE220A8397B1DCDAF first.
  EXPECT_EQ(CounterRng::mix(0x9E3779B97F4A7C15ull), 0xE220A8397B1DCDAFull);
}

// Degree of a uniform 3-qubit state is Binomial(8, 1/2).
TEST(SamplingTest, DegreeDistribution) {
  constexpr std::uint64_t kSamples = 100000;
  std::vector<double> counts(9, 0);
  for (std::uint64_t i = 0; i < kSamples; ++i) counts[structural_degree(sample_state(3, 2024, i))] += 1;
  double chi2 = 0;
  for (unsigned m = 0; m <= 8; ++m) {
    const double p = static_cast<double>(oracle::binom(8, m)) / 256.0;
    const double expected = p * kSamples;
    const double sigma = std::sqrt(kSamples * p * (1 - p));
    EXPECT_LE(std::abs(counts[m] - expected), 3 * sigma) << "bin " << m;
    chi2 += (counts[m] - expected) * (counts[m] - expected) / expected;
  }
  EXPECT_LT(chi2, 26.12);  // 99.9th percentile, 8 degrees of freedom
}

TEST(SamplingTest, WithDegree) {
  for (std::uint64_t m = 0; m <= 32; ++m) {
    for (std::uint64_t i = 0; i < 5; ++i) EXPECT_EQ(structural_degree(sample_with_degree(5, m, 3, i)), m);
  }
  // All C(4,2) = 6 two-qubit states of degree 2 show up with similar frequency.
  std::map<std::uint64_t, int> seen;
  for (std::uint64_t i = 0; i < 6000; ++i) ++seen[sample_with_degree(2, 2, 8, i).to_integer()];
  ASSERT_EQ(seen.size(), 6u);
  for (const auto& [v, c] : seen) EXPECT_NEAR(c, 1000, 150);
}

}  // namespace
}  // namespace rews
