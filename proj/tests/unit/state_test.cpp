#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "rews/state.hpp"
#include "rews/text_format.hpp"

namespace rews {
namespace {

using testing_support::S;

std::vector<std::uint8_t> bits_of(std::string_view s) {
  std::vector<std::uint8_t> out;
  for (char c : s) out.push_back(c == '1');
  return out;
}

TEST(RewsTest, FromBits) {
  EXPECT_EQ(Rews::from_bits(2, bits_of("0000")), constant_state(2, Sign::kPlus));
  EXPECT_EQ(format_state(Rews::from_bits(2, bits_of("0110"))), "2:0110");
  EXPECT_THROW(Rews::from_bits(2, bits_of("011")), InputError);
  EXPECT_THROW(Rews::from_bits(21, {}), RangeError);
  EXPECT_THROW(Rews::from_bits(0, bits_of("0")), RangeError);
}

TEST(RewsTest, LargeRepresentationOnly) {
  const Rews r = constant_state(20, Sign::kMinus);
  EXPECT_EQ(structural_degree(r), std::uint64_t{1} << 20);
  EXPECT_EQ(r.words().size(), (std::size_t{1} << 20) / 64);
}

TEST(RewsTest, ConstantStates) {
  EXPECT_EQ(format_state(constant_state(3, Sign::kPlus)), "3:00000000");
  EXPECT_EQ(format_state(constant_state(3, Sign::kMinus)), "3:11111111");
  EXPECT_EQ(structural_degree(constant_state(3, Sign::kMinus)), 8u);
  EXPECT_EQ(format_state(constant_state(1, Sign::kPlus)), "1:00");
}

TEST(RewsTest, FromAffine) {
  EXPECT_EQ(format_state(from_affine(2, {0b11, false})), "2:0110");
  EXPECT_EQ(format_state(from_affine(1, {0b1, true})), "1:10");
  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_EQ(from_affine(n, {0, false}), constant_state(n, Sign::kPlus));
    EXPECT_EQ(from_affine(n, {0, true}), constant_state(n, Sign::kMinus));
  }
}

TEST(RewsTest, StructuralDegree) {
  EXPECT_EQ(structural_degree(S("2:0000")), 0u);
  EXPECT_EQ(structural_degree(S("2:0110")), 2u);
  EXPECT_EQ(structural_degree(S("3:10000111")), 4u);
}

TEST(RewsTest, Negate) {
  EXPECT_EQ(negate(S("3:10000000")), S("3:01111111"));
  EXPECT_EQ(structural_degree(negate(S("3:10000000"))), 7u);
  EXPECT_EQ(negate(constant_state(4, Sign::kPlus)), constant_state(4, Sign::kMinus));
}

TEST(RewsTest, Tensor) {
  EXPECT_EQ(tensor(S("1:01"), S("2:1000")), S("3:10000111"));
  EXPECT_EQ(tensor(constant_state(1, Sign::kPlus), S("2:1001")), S("3:10011001"));
  EXPECT_THROW(tensor(constant_state(10, Sign::kPlus), constant_state(11, Sign::kPlus)), RangeError);
}

TEST(RewsTest, ClassifyExamples) {
  auto cls = [](unsigned n, std::uint64_t m) { return classify_degree(n, m); };
  EXPECT_EQ(cls(2, 1), StructuralClass::kOdd);
  EXPECT_EQ(cls(2, 2), StructuralClass::kBalanced);
  EXPECT_EQ(cls(3, 2), StructuralClass::kEvenLow);
  EXPECT_EQ(cls(3, 6), StructuralClass::kEvenLowMirror);
  EXPECT_EQ(cls(4, 2), StructuralClass::kEvenLow);
  EXPECT_EQ(cls(4, 4), StructuralClass::kEvenMid);
  EXPECT_EQ(cls(4, 6), StructuralClass::kEvenMid);
  EXPECT_EQ(cls(4, 10), StructuralClass::kEvenMidMirror);
  EXPECT_EQ(cls(4, 12), StructuralClass::kEvenMidMirror);
  EXPECT_EQ(cls(4, 14), StructuralClass::kEvenLowMirror);
  EXPECT_EQ(classify(S("3:10000111")), StructuralClass::kBalanced);
  EXPECT_EQ(class_tag(StructuralClass::kEvenMidMirror), "G_EvenMidMirror");
}

TEST(RewsTest, SmallRegistersHaveNoEvenClasses) {
  for (std::uint64_t m = 0; m <= 4; ++m) {
    EXPECT_LT(static_cast<int>(classify_degree(2, m)), static_cast<int>(StructuralClass::kEvenLow));
  }
  for (std::uint64_t m = 0; m <= 8; ++m) {
    const auto c = classify_degree(3, m);
    EXPECT_NE(c, StructuralClass::kEvenMid);
    EXPECT_NE(c, StructuralClass::kEvenMidMirror);
  }
}

// The membership rules written out separately; every degree must satisfy
// exactly one of them and classify_degree must pick that one.
TEST(RewsTest, ClassesPartitionDegrees) {
  for (unsigned n = 1; n <= 6; ++n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m <= dim; ++m) {
      const bool even = m % 2 == 0;
      const std::uint64_t r = dim - m;
      bool in[7] = {
          !even,
          m == 0 || m == dim,
          m == dim / 2 && even,
          even && m >= 2 && m * m < dim,
          even && r * r < dim && m + 2 <= dim,
          even && m * m >= dim && m + 2 <= dim / 2,
          even && m >= dim / 2 + 2 && r * r >= dim,
      };
      if (n == 1 && m == 1) in[2] = false;  // odd wins at n = 1
      int hits = 0;
      int which = -1;
      for (int c = 0; c < 7; ++c) {
        if (in[c]) {
          ++hits;
          which = c;
        }
      }
      ASSERT_EQ(hits, 1) << "n=" << n << " m=" << m;
      EXPECT_EQ(static_cast<int>(classify_degree(n, m)), which) << "n=" << n << " m=" << m;
    }
  }
}

TEST(RewsTest, MirrorClasses) {
  for (unsigned n = 1; n <= 8; ++n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m <= dim; ++m) {
      EXPECT_EQ(classify_degree(n, dim - m), mirror_class(classify_degree(n, m)));
    }
  }
}

TEST(RewsTest, AffineTest) {
  EXPECT_EQ(affine_test(S("2:0110")), (AffineForm{0b11, false}));
  EXPECT_EQ(affine_test(S("2:1001")), (AffineForm{0b11, true}));
  EXPECT_FALSE(affine_test(S("2:0100")).has_value());
  for (unsigned n = 1; n <= 6; ++n) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      for (bool c : {false, true}) {
        EXPECT_EQ(affine_test(from_affine(n, {a, c})), (AffineForm{a, c}));
      }
    }
  }
}

TEST(RewsTest, AffineStatesHaveEvenDegreeAtTwoQubits) {
  for (std::uint64_t v = 0; v < 16; ++v) {
    const Rews r = Rews::from_integer(2, v);
    if (affine_test(r)) EXPECT_EQ(structural_degree(r) % 2, 0u);
  }
}

TEST(RewsTest, PermuteQubits) {
  const unsigned swap12[] = {2, 1};
  EXPECT_EQ(permute_qubits(S("2:0011"), swap12), S("2:0101"));
  const unsigned id3[] = {1, 2, 3};
  EXPECT_EQ(permute_qubits(S("3:10000111"), id3), S("3:10000111"));
  const unsigned bad[] = {1, 1};
  EXPECT_THROW(permute_qubits(S("2:0011"), bad), InputError);
}

TEST(RewsTest, RestrictAndNormalize) {
  EXPECT_EQ(restrict_to(S("3:10000111"), QubitSet::single(1)), S("1:10"));
  const Normalized nr = normalize(S("2:1110"));
  EXPECT_EQ(nr.state, S("2:0001"));
  EXPECT_EQ(nr.sign, Sign::kMinus);
}

TEST(RewsTest, OrderingFollowsSignInteger) {
  EXPECT_LT(S("2:0000"), S("2:1000"));
  EXPECT_LT(S("2:1000"), S("2:0100"));
  EXPECT_LT(S("2:1111"), S("3:00000000"));
}

TEST(RewsTest, BitHelpers) {
  EXPECT_EQ(extract_bits(0b101100, 0b111000), 0b101u);
  EXPECT_EQ(deposit_bits(0b101, 0b111000), 0b101000u);
  EXPECT_EQ(QubitSet::lift(QubitSet{0b10}, QubitSet{0b1010}), QubitSet{0b1000});
  EXPECT_EQ((QubitSet{0b1011}.qubits()), (std::vector<unsigned>{1, 2, 4}));
}

class RewsProperty : public ::testing::Test {
 protected:
  std::mt19937_64 gen{20240917};
};

TEST_F(RewsProperty, DegreeWithinRange) {
  for (int i = 0; i < testing_support::kPropertyInstances; ++i) {
    const unsigned n = 1 + gen() % 8;
    const Rews r = testing_support::random_state(gen, n);
    ASSERT_LE(structural_degree(r), r.dimension());
  }
}

TEST_F(RewsProperty, NegationComplementsDegree) {
  for (int i = 0; i < testing_support::kPropertyInstances; ++i) {
    const unsigned n = 1 + gen() % 8;
    const Rews r = testing_support::random_state(gen, n);
    ASSERT_EQ(structural_degree(r) + structural_degree(negate(r)), r.dimension());
    ASSERT_EQ(negate(negate(r)), r);
  }
}

TEST_F(RewsProperty, TensorDegreeComposition) {
  for (int i = 0; i < testing_support::kPropertyInstances; ++i) {
    const unsigned na = 1 + gen() % 5;
    const unsigned nb = 1 + gen() % 5;
    const Rews a = testing_support::random_state(gen, na);
    const Rews b = testing_support::random_state(gen, nb);
    const std::uint64_t da = structural_degree(a);
    const std::uint64_t db = structural_degree(b);
    ASSERT_EQ(structural_degree(tensor(a, b)),
              (a.dimension() - da) * db + (b.dimension() - db) * da);
    ASSERT_EQ(tensor(a, b), tensor(negate(a), negate(b)));
  }
}

TEST_F(RewsProperty, TensorAssociative) {
  for (int i = 0; i < 2000; ++i) {
    const Rews a = testing_support::random_state(gen, 1 + gen() % 3);
    const Rews b = testing_support::random_state(gen, 1 + gen() % 3);
    const Rews c = testing_support::random_state(gen, 1 + gen() % 3);
    ASSERT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
  }
}

TEST_F(RewsProperty, PermutationKeepsDegreeAndInverts) {
  for (int i = 0; i < 2000; ++i) {
    const unsigned n = 1 + gen() % 7;
    const Rews r = testing_support::random_state(gen, n);
    const auto perm = testing_support::random_perm(gen, n);
    std::vector<unsigned> inverse(n);
    for (unsigned q = 1; q <= n; ++q) inverse[perm[q - 1] - 1] = q;
    const Rews moved = permute_qubits(r, perm);
    ASSERT_EQ(structural_degree(moved), structural_degree(r));
    ASSERT_EQ(classify(moved), classify(r));
    ASSERT_EQ(permute_qubits(moved, inverse), r);
  }
}

}  // namespace
}  // namespace rews
