#include <gtest/gtest.h>

#include "test_util.hpp"
#include "zetashuffle/error.hpp"

namespace zetashuffle {
namespace {

using testing::W;

TEST(ParseWord, ExpandsLetters) {
  EXPECT_EQ(parse_word("xxyy"), Word({Letter::X, Letter::X, Letter::Y, Letter::Y}));
  EXPECT_EQ(parse_word("x^2 y x y"), Word({Letter::X, Letter::X, Letter::Y, Letter::X, Letter::Y}));
  EXPECT_TRUE(parse_word("").empty());
  EXPECT_TRUE(parse_word("  ").empty());
  EXPECT_EQ(parse_word("y^0x"), Word({Letter::X}));
}

TEST(ParseWord, ReportsOffset) {
  try {
    parse_word("xyz");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2U);
  }
  EXPECT_THROW(parse_word("x^"), ParseError);
  EXPECT_THROW(parse_word("X"), ParseError);
  EXPECT_THROW(parse_word("x^-1"), ParseError);
}

TEST(ParseWord, ExponentCap) {
  EXPECT_EQ(parse_word("x^1000000").size(), 1'000'000U);
  EXPECT_THROW(parse_word("x^1000001"), ParseError);
  EXPECT_THROW(parse_word("y^99999999999999999999"), ParseError);
  EXPECT_THROW(parse_word("x^11", 10), ParseError);
}

TEST(PrintWord, Canonical) {
  EXPECT_EQ(print_word(W("xxyxy")), "x^2yxy");
  EXPECT_EQ(print_word(Word()), "1");
  EXPECT_EQ(print_word(W("y^3")), "y^3");
}

TEST(Admissible, Definition) {
  EXPECT_TRUE(is_admissible(W("xy")));
  EXPECT_FALSE(is_admissible(W("yx")));
  EXPECT_TRUE(is_admissible(Word()));
  EXPECT_FALSE(is_admissible(W("y")));
  EXPECT_FALSE(is_admissible(W("xx")));
}

TEST(ExponentFormTest, ReadsBlocks) {
  EXPECT_EQ(to_exponent_form(W("xxyy")), ExponentForm({2, 0}));
  EXPECT_EQ(to_exponent_form(W("xyxy")), ExponentForm({1, 1}));
  EXPECT_EQ(to_exponent_form(W("xxy")), ExponentForm({2}));
  EXPECT_EQ(to_exponent_form(W("yxy")), ExponentForm({0, 1}));
}

TEST(ExponentFormTest, RejectsOutsideH1) {
  for (const char* bad : {"yx", "", "x"}) {
    try {
      to_exponent_form(W(bad));
      FAIL() << bad;
    } catch (const DomainError& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotInH1);
    }
  }
}

TEST(Mzv, WordToIndex) {
  EXPECT_EQ(word_to_mzv(W("xxyy")), MzvIndex({3, 1}));
  EXPECT_EQ(word_to_mzv(W("xyxy")), MzvIndex({2, 2}));
  EXPECT_EQ(word_to_mzv(W("xyy")), MzvIndex({2, 1}));
  EXPECT_EQ(mzv_to_word(MzvIndex({3, 1})), W("x^2y^2"));
  EXPECT_THROW(word_to_mzv(W("yxy")), DomainError);
  EXPECT_THROW(word_to_mzv(Word()), DomainError);
  EXPECT_THROW(MzvIndex({1, 2}), DomainError);
  EXPECT_THROW(MzvIndex({}), DomainError);
}

TEST(Mzv, ParseIndex) {
  EXPECT_EQ(parse_mzv_index("3,1"), MzvIndex({3, 1}));
  EXPECT_EQ(parse_mzv_index(" 2 , 2 "), MzvIndex({2, 2}));
  EXPECT_EQ(print_mzv_index(MzvIndex({4, 1, 1})), "4,1,1");
  EXPECT_THROW(parse_mzv_index("3,,1"), ParseError);
  EXPECT_THROW(parse_mzv_index("3,0"), ParseError);
  EXPECT_THROW(parse_mzv_index("a"), ParseError);
  try {
    parse_mzv_index("1,2");
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAdmissible);
  }
}

TEST(CanonicalOrder, LengthThenYBeforeX) {
  const CanonicalLess less;
  EXPECT_TRUE(less(W("xy"), W("yyy")));
  EXPECT_TRUE(less(W("xyxy"), W("xxyy")));
  EXPECT_TRUE(less(W("y"), W("x")));
  EXPECT_FALSE(less(W("xy"), W("xy")));
  const auto words = all_words(3);
  ASSERT_EQ(words.size(), 8U);
  EXPECT_TRUE(std::is_sorted(words.begin(), words.end(), less));
  EXPECT_EQ(words.front(), W("yyy"));
  EXPECT_EQ(words.back(), W("xxx"));
}

// Exhaustive round trips up to length 12.
TEST(WordProperties, RoundTrips) {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const Word& w : all_words(n)) {
      ASSERT_EQ(parse_word(print_word(w) == "1" ? "" : print_word(w)), w);
      if (in_h1(w)) ASSERT_EQ(from_exponent_form(to_exponent_form(w)), w);
      if (!w.empty() && is_admissible(w)) {
        const MzvIndex idx = word_to_mzv(w);
        ASSERT_EQ(idx.weight(), static_cast<int>(w.size()));
        ASSERT_EQ(static_cast<std::size_t>(idx.depth()), w.count(Letter::Y));
        ASSERT_EQ(mzv_to_word(idx), w);
      }
    }
  }
}

TEST(WordProperties, ExponentFormsRoundTrip) {
  for (int len = 1; len <= 12; ++len) {
    for (int depth = 1; depth <= len; ++depth) {
      std::vector<int> e(static_cast<std::size_t>(depth), 0);
      e[0] = len - depth;
      const ExponentForm f(e);
      ASSERT_EQ(to_exponent_form(from_exponent_form(f)), f);
      ASSERT_EQ(f.length(), len);
    }
  }
}

TEST(WordHash, EqualWordsHashEqual) {
  std::hash<Word> h;
  EXPECT_EQ(h(W("xyxy")), h(W("xyxy")));
  EXPECT_NE(h(W("xyxy")), h(W("xxyy")));
}

}  // namespace
}  // namespace zetashuffle
