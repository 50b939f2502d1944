#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rews/census.hpp"

namespace rews {
namespace {

TEST(CensusTest, EnumerateAll) {
  EXPECT_EQ(enumerate_all(1).size(), 4u);
  EXPECT_EQ(enumerate_all(2).size(), 16u);
  const auto all = enumerate_all(3);
  ASSERT_EQ(all.size(), 256u);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1], all[i]);
  EXPECT_THROW(enumerate_all(5), RangeError);
  try {
    enumerate_all(5);
  } catch (const RangeError& e) {
    EXPECT_NE(std::string(e.what()).find("sample_random"), std::string::npos);
  }
}

// Class sizes as sums of binomials over the class boundaries.
BigInt class_size(unsigned n, StructuralClass c) {
  BigInt sum = 0;
  for (unsigned m = 0; m <= (1u << n); ++m) {
    if (classify_degree(n, m) == c) sum += oracle::binom(1u << n, m);
  }
  return sum;
}

TEST(CensusTest, ClassCountsTwoQubits) {
  const auto t = census(2, DeltaMethod::kBrute, 1);
  EXPECT_EQ(t.count_class(StructuralClass::kOdd), 8);
  EXPECT_EQ(t.count_class(StructuralClass::kConstant), 2);
  EXPECT_EQ(t.count_class(StructuralClass::kBalanced), 6);
  for (auto c : {StructuralClass::kEvenLow, StructuralClass::kEvenLowMirror, StructuralClass::kEvenMid,
                 StructuralClass::kEvenMidMirror}) {
    EXPECT_EQ(t.count_class(c), 0);
  }
  EXPECT_EQ(t.count_delta(2), 8);
  EXPECT_EQ(t.count_delta(1), 8);
}

TEST(CensusTest, ClassCountsThreeQubits) {
  const auto t = census(3, DeltaMethod::kBrute, 1);
  EXPECT_EQ(t.count_class(StructuralClass::kOdd), 128);
  EXPECT_EQ(t.count_class(StructuralClass::kConstant), 2);
  EXPECT_EQ(t.count_class(StructuralClass::kBalanced), 70);
  EXPECT_EQ(t.count_class(StructuralClass::kEvenLow), 28);
  EXPECT_EQ(t.count_class(StructuralClass::kEvenLowMirror), 28);
  EXPECT_EQ(t.count_class(StructuralClass::kEvenMid), 0);
  for (auto c : kAllClasses) EXPECT_EQ(t.count_class(c), class_size(3, c));
}

TEST(CensusTest, MarginalsAndMirror) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto t = census(n, DeltaMethod::kFastWithFallback);
    EXPECT_EQ(t.total(), pow2(std::uint64_t{1} << n));
    for (unsigned m = 0; m <= (1u << n); ++m) {
      EXPECT_EQ(t.count_degree(m), oracle::binom(1u << n, m));
      EXPECT_EQ(t.count_degree(m), t.count_degree((1u << n) - m));
    }
  }
}

TEST(CensusTest, DeltaMarginalMatchesOracle) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto table = oracle::delta_table(n);
    const auto t = census(n, DeltaMethod::kBrute);
    for (unsigned d = 1; d <= n; ++d) {
      EXPECT_EQ(t.count_delta(d), std::count(table.begin(), table.end(), d)) << "n=" << n << " d=" << d;
    }
  }
}

TEST(CensusTest, FastMatchesBrute) {
  for (unsigned n = 1; n <= 4; ++n) {
    EXPECT_EQ(census(n, DeltaMethod::kBrute), census(n, DeltaMethod::kFastWithFallback));
  }
}

TEST(CensusTest, ShardCountDoesNotMatter) {
  const auto one = census(3, DeltaMethod::kBrute, 1);
  for (unsigned w : {2u, 3u, 7u, 300u}) EXPECT_EQ(census(3, DeltaMethod::kBrute, w), one);
  EXPECT_EQ(separable_degree_table(3, DeltaMethod::kBrute, 5), separable_degree_table(3, DeltaMethod::kBrute, 1));
}

TEST(CensusTest, MergeIsCommutative) {
  CensusTable a, b;
  a.n = b.n = 2;
  a.rows[{1, StructuralClass::kOdd, 1}] = 3;
  b.rows[{1, StructuralClass::kOdd, 1}] = 4;
  b.rows[{2, StructuralClass::kBalanced, 2}] = 1;
  CensusTable ab = a, ba = b;
  ab.merge(b);
  ba.merge(a);
  EXPECT_EQ(ab, ba);
  EXPECT_EQ(ab.total(), 8);
}

}  // namespace
}  // namespace rews
