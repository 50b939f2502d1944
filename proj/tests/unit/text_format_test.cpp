#include <gtest/gtest.h>

#include "rews/census.hpp"
#include "rews/text_format.hpp"

namespace rews {
namespace {

TEST(TextFormatTest, ParsesBits) {
  const Rews r = parse_state("3:10000111");
  EXPECT_EQ(r.qubits(), 3u);
  EXPECT_EQ(structural_degree(r), 4u);
  EXPECT_TRUE(r.bit(0));
  EXPECT_FALSE(r.bit(1));
}

TEST(TextFormatTest, ParsesHexBigEndian) {
  EXPECT_EQ(parse_state("3:0x87"), parse_state("3:10000111"));
  EXPECT_EQ(parse_state("2:0xF"), parse_state("2:1111"));
  EXPECT_EQ(format_state_hex(parse_state("3:10000111")), "3:0x87");
}

TEST(TextFormatTest, ParsesAffine) {
  EXPECT_EQ(format_state(parse_state("affine:2:11:0")), "2:0110");
  EXPECT_EQ(format_state(parse_state("affine:1:1:1")), "1:10");
  EXPECT_EQ(format_affine(2, {0b11, false}), "affine:2:11:0");
}

TEST(TextFormatTest, RejectsBadLength) {
  try {
    parse_state("2:011");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);  // where the missing bit would go
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
  }
}

TEST(TextFormatTest, RejectsBadCharacter) {
  try {
    parse_state("2:01x0");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_state("2:0xG"), ParseError);
  EXPECT_THROW(parse_state(""), ParseError);
  EXPECT_THROW(parse_state("x:01"), ParseError);
  EXPECT_THROW(parse_state("0:0"), ParseError);
  EXPECT_THROW(parse_state("affine:2:1:0"), ParseError);
  EXPECT_THROW(parse_state("affine:2:11:2"), ParseError);
}

TEST(TextFormatTest, RejectsLargeN) {
  EXPECT_THROW(parse_state("21:0"), RangeError);
  EXPECT_THROW(parse_state("1000:0"), RangeError);
}

TEST(TextFormatTest, RoundTripExhaustive) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (const Rews& r : enumerate_all(n)) {
      ASSERT_EQ(parse_state(format_state(r)), r);
      if (n >= 2) ASSERT_EQ(parse_state(format_state_hex(r)), r);
    }
  }
}

TEST(TextFormatTest, FormatQubits) {
  EXPECT_EQ(format_qubits(QubitSet{0b101}), "{1,3}");
  EXPECT_EQ(format_qubits(QubitSet{}), "{}");
}

}  // namespace
}  // namespace rews
