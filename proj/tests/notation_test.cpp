#include "goodstein/notation.hpp"

#include <gtest/gtest.h>

#include "goodstein/errors.hpp"
#include "test_support.hpp"

namespace goodstein {
namespace {

using testing::C;
using testing::Gen;
using testing::K;
using testing::R;
using testing::T;

TEST(FormatTest, Examples) {
  EXPECT_EQ(format(decompose(3, Base(2))), "1*2^(1) + 1*2^(0)");
  EXPECT_EQ(format(decompose(19, Base(2))),
            "1*2^(1*2^(1*2^(1))) + 1*2^(1) + 1*2^(0)");
  EXPECT_EQ(format(decompose(26, Base(3))), "2*3^(2) + 2*3^(1) + 2*3^(0)");
  EXPECT_EQ(format(HereditaryRep(Base(5))), "0");
}

TEST(FormatTest, PaddedAddsZeroConstant) {
  EXPECT_EQ(format(decompose(3, Base(3)), Notation::kPadded),
            "1*3^(1) + 0*3^(0)");
  EXPECT_EQ(format(decompose(4, Base(3)), Notation::kPadded),
            "1*3^(1) + 1*3^(0)");
  EXPECT_EQ(format(HereditaryRep(Base(3)), Notation::kPadded), "0*3^(0)");
}

TEST(ParseTest, Examples) {
  EXPECT_EQ(parse("1*2^(1) + 1*2^(0)"), decompose(3, Base(2)));
  EXPECT_EQ(parse("1*2^(1*2^(1*2^(1))) + 1*2^(1) + 1*2^(0)"),
            decompose(19, Base(2)));
}

TEST(ParseTest, LongAndShortExponentSpellingsAgree) {
  EXPECT_EQ(parse("1*2^(1*2^(0)) + 1*2^(0)"), parse("1*2^(1) + 1*2^(0)"));
  EXPECT_EQ(parse("2*3^(2*3^(0))"), R(3, T({{2, C(2)}})));
}

TEST(ParseTest, ZeroTakesTheHint) {
  EXPECT_EQ(parse("0"), HereditaryRep(Base(2)));
  EXPECT_EQ(parse("0", Base(7)), HereditaryRep(Base(7)));
  EXPECT_EQ(parse(" 0 "), HereditaryRep(Base(2)));
}

TEST(ParseTest, IgnoresWhitespace) {
  EXPECT_EQ(parse(" 1 * 2 ^ ( 1 ) +1*2^(0) "), decompose(3, Base(2)));
}

TEST(ParseTest, HintMustMatch) {
  EXPECT_NO_THROW(parse("1*3^(0)", Base(3)));
  EXPECT_THROW(parse("1*3^(0)", Base(4)), NonCanonical);
}

TEST(ParseTest, RejectsNonCanonical) {
  EXPECT_THROW(parse("3*2^(0)"), NonCanonical);
  EXPECT_THROW(parse("0*2^(0)"), NonCanonical);
  EXPECT_THROW(parse("1*2^(0) + 1*2^(1)"), NonCanonical);
  EXPECT_THROW(parse("1*2^(1) + 1*2^(1)"), NonCanonical);
  EXPECT_THROW(parse("1*2^(0) + 1*3^(0)"), NonCanonical);
  EXPECT_THROW(parse("1*2^(1*3^(0))"), NonCanonical);
  EXPECT_THROW(parse("1*2^(5)"), NonCanonical);
  EXPECT_THROW(parse("1*1^(0)"), NonCanonical);
}

TEST(ParseTest, SyntaxErrorsCarryPosition) {
  auto position_of = [](std::string_view text) -> std::size_t {
    try {
      parse(text);
    } catch (const SyntaxError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no SyntaxError for " << text;
    return 0;
  };
  EXPECT_EQ(position_of("1*2^(0) +"), 9u);
  EXPECT_EQ(position_of("1*2(0)"), 3u);
  EXPECT_EQ(position_of("1*2^("), 5u);
  EXPECT_EQ(position_of("1*2^(0) x"), 8u);
  EXPECT_EQ(position_of(""), 0u);
  EXPECT_EQ(position_of("7"), 1u);
  EXPECT_EQ(position_of("99999999999999999999*2^(0)"), 0u);
}

TEST(NotationProperty, ParseInvertsFormat) {
  Gen gen(11);
  for (int i = 0; i < 20000; ++i) {
    auto r = gen.rep(5000, 12);
    ASSERT_EQ(parse(format(r), r.base()), r) << format(r);
  }
  for (auto m : {Natural("123456789012345678901234567890"),
                 Natural("340282366920938463463374607431768211457")}) {
    for (std::uint64_t b : {2ULL, 3ULL, 10ULL, 1000ULL}) {
      auto r = decompose(m, Base(b));
      ASSERT_EQ(parse(format(r)), r) << format(r);
    }
  }
}

TEST(NotationProperty, BumpedRepsRoundTrip) {
  auto r = decompose(16, Base(2));
  for (int i = 0; i < 20; ++i) {
    r = bump(r);
    ASSERT_EQ(parse(format(r)), r);
    r = decrement(r);
    ASSERT_EQ(parse(format(r), r.base()), r);
  }
}

}  // namespace
}  // namespace goodstein
