#include <gtest/gtest.h>

#include "test_util.hpp"
#include "zetashuffle/closed_form.hpp"
#include "zetashuffle/error.hpp"
#include "zetashuffle/shuffle.hpp"

namespace zetashuffle {
namespace {

using testing::lc;
using testing::W;

Word ef(std::vector<int> e) { return word_from_exponents(e); }

TEST(Binom, Convention) {
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(3, -1), 0);
  EXPECT_EQ(binom(2, 5), 0);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(66, 33), Integer("7219428434016265740"));
  EXPECT_EQ(binom(100, 50), Integer("100891344545564193334812497256"));
  try {
    binom(-1, 0);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeUpperIndex);
  }
}

TEST(Binom, RunCount) {
  EXPECT_EQ(run_binom(-1, 0), 1);
  EXPECT_EQ(run_binom(-1, 1), 0);
  EXPECT_EQ(run_binom(4, -1), 0);
  EXPECT_EQ(run_binom(4, 2), 6);
  EXPECT_THROW(run_binom(-2, 0), DomainError);
}

TEST(Vandermonde, SmallCases) {
  EXPECT_TRUE(vandermonde_check(2, 2, 2));
  EXPECT_TRUE(vandermonde_check(0, 5, 3));
  EXPECT_TRUE(vandermonde_check(7, 5, 6));
  for (int k = 0; k <= 12; ++k) {
    for (int l = 0; l <= 12; ++l) {
      for (int n = 0; n <= 12; ++n) ASSERT_TRUE(vandermonde_check(k, l, n));
    }
  }
}

TEST(Compositions, Enumeration) {
  const auto cs = compositions(4, 2);
  ASSERT_EQ(cs.size(), 3U);
  EXPECT_EQ(cs[0][0], 1);
  EXPECT_EQ(cs[2][0], 3);
  EXPECT_EQ(cs[1].prefix(2), 4);
  EXPECT_TRUE(compositions(2, 3).empty());
  EXPECT_THROW(Composition({1, 0}), DomainError);
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) ASSERT_EQ(Integer(compositions(n, k).size()), binom(n - 1, k - 1));
  }
  int weak = 0;
  for_each_weak_composition(5, 3, [&](std::span<const int> c) {
    ASSERT_EQ(c[0] + c[1] + c[2], 5);
    ++weak;
  });
  EXPECT_EQ(weak, 21);
}

TEST(BetaGamma, EulerCase) {
  const ExponentForm a({3});
  const ExponentForm b({2});
  const Composition one({1});
  const int alphas[] = {4, 1};
  EXPECT_EQ(beta_sequence(one, one, alphas, a, b), (std::vector<long>{3, 3 + 2 - 4}));
  EXPECT_EQ(gamma_sequence(one, one, alphas, a, b), (std::vector<long>{2, 3 + 2 - 4}));
}

TEST(BetaGamma, FirstBlockCopiesA) {
  const ExponentForm a({2, 5, 1});
  const ExponentForm b({4});
  const int alphas[] = {3, 5, 1, 3};
  const auto beta = beta_sequence(Composition({3}), Composition({1}), alphas, a, b);
  EXPECT_EQ(beta, (std::vector<long>{2, 5, 1, 2 + 5 + 1 + 4 - 3 - 5 - 1}));
}

TEST(BetaGamma, NegativeEntriesAllowed) {
  const ExponentForm a({0});
  const ExponentForm b({0, 0});
  const int alphas[] = {0, 0, 0};
  const auto beta = beta_sequence(Composition({1}), Composition({2}), alphas, a, b);
  EXPECT_EQ(beta.size(), 3U);
  const int heavy[] = {5, 0};
  const auto neg = beta_sequence(Composition({1}), Composition({1}), heavy, ExponentForm({2}), ExponentForm({3}));
  EXPECT_EQ(neg[1], 0);
  EXPECT_EQ(coeff_general(heavy, ExponentForm({2}), ExponentForm({3})), binom(5, 2) + binom(5, 3));
}

TEST(BetaGamma, DimensionErrors) {
  const ExponentForm a({1, 1});
  const ExponentForm b({1});
  const int alphas[] = {1, 1, 1};
  EXPECT_THROW(beta_sequence(Composition({1}), Composition({1}), alphas, a, b), DomainError);
  EXPECT_THROW(beta_sequence(Composition({1, 1}), Composition({1}), std::span<const int>(alphas, 2), a, b),
               DomainError);
  // beta needs len(l) >= len(n); gamma the reverse.
  EXPECT_THROW(gamma_sequence(Composition({1, 1}), Composition({1}), alphas, a, b), DomainError);
  EXPECT_THROW(coeff_general(std::span<const int>(alphas, 2), a, b), DomainError);
  const int wrong_sum[] = {1, 1, 2};
  EXPECT_THROW(coeff_general(wrong_sum, a, b), DomainError);
}

TEST(CoeffGeneral, EulerExample) {
  const ExponentForm one({1});
  const int a11[] = {1, 1};
  const int a20[] = {2, 0};
  const int a02[] = {0, 2};
  EXPECT_EQ(coeff_general(a11, one, one), 2);
  EXPECT_EQ(coeff_general(a20, one, one), 4);
  EXPECT_EQ(coeff_general(a02, one, one), 0);
}

TEST(CoeffGeneral, MatchesEulerEverywhere) {
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      for (int a1 = 0; a1 <= a + b; ++a1) {
        const int al[] = {a1, a + b - a1};
        ASSERT_EQ(coeff_general(al, ExponentForm({a}), ExponentForm({b})), binom(a1, a) + binom(a1, b));
      }
    }
  }
}

TEST(ExpandGeneral, Examples) {
  EXPECT_EQ(expand_general(ExponentForm({1}), ExponentForm({1})), lc({{"xyxy", 2}, {"xxyy", 4}}));
  EXPECT_EQ(expand_general(ExponentForm({0}), ExponentForm({0})), lc({{"yy", 2}}));
  EXPECT_EQ(expand_general(ExponentForm({2, 0}), ExponentForm({1})), shuffle_recursive(W("xxyy"), W("xy")));
  EXPECT_EQ(expand_general(ExponentForm({1, 1}), ExponentForm({1, 1})), shuffle_recursive(W("xyxy"), W("xyxy")));
}

TEST(ExpandEuler, Examples) {
  EXPECT_EQ(expand_euler(1, 1), lc({{"xyxy", 2}, {"xxyy", 4}}));
  EXPECT_EQ(expand_euler(0, 0), lc({{"yy", 2}}));
  EXPECT_EQ(expand_euler(2, 1), lc({{"x^2yxy", 3}, {"x^3y^2", 6}, {"xyx^2y", 1}}));
  EXPECT_THROW(expand_euler(-1, 0), DomainError);
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) ASSERT_EQ(expand_euler(a, b), expand_general(ExponentForm({a}), ExponentForm({b})));
  }
}

TEST(Expand1s, Examples) {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) ASSERT_EQ(expand_1_s(a, ExponentForm({b})), expand_euler(a, b));
  }
  EXPECT_EQ(expand_1_s(1, ExponentForm({1, 0, 1})), shuffle_recursive(W("xy"), W("xyyxy")));
  EXPECT_EQ(expand_1_s(1, ExponentForm({1, 0, 1})),
            lc({{"x^2y^2xy^2", 4}, {"x^2y^3xy", 6}, {"xy^2x^2y^2", 4}, {"xy^2xyxy", 2}, {"xyxy^2xy", 3}, {"xyxyxy^2", 2}}));
}

TEST(Expand1s, MatchesGeneralToLength8) {
  for (int len = 2; len <= 8; ++len) {
    for (int s = 1; s + 1 <= len; ++s) {
      for_each_weak_composition(len - s - 1, s + 1, [&](std::span<const int> p) {
        const ExponentForm b(std::vector<int>(p.begin() + 1, p.end()));
        ASSERT_EQ(expand_1_s(p[0], b), expand_general(ExponentForm({p[0]}), b));
      });
    }
  }
}

TEST(ExpandSmall, Examples) {
  const int c22[] = {1, 0, 1, 0};
  EXPECT_EQ(expand_small(SmallCase::kC22, c22), shuffle_recursive(W("xyy"), W("xyy")));
  const int c12[] = {1, 1, 1};
  EXPECT_EQ(expand_small(SmallCase::kC12, c12), expand_1_s(1, ExponentForm({1, 1})));
  const int zeros[] = {0, 0, 0, 0, 0, 0};
  EXPECT_EQ(expand_small(SmallCase::kC33, zeros), lc({{"y^6", 20}}));
  EXPECT_THROW(expand_small(SmallCase::kC23, c22), DomainError);
}

// The second 2x3 term subtracts alpha_4. Dropping that subtraction already
// breaks this point.
TEST(ExpandSmall, TwoByThreeUsesAlpha4) {
  const int p[] = {0, 0, 0, 1, 0};
  EXPECT_EQ(expand_small(SmallCase::kC23, p), shuffle_recursive(W("yy"), W("yxyy")));
}

struct SmallCaseParam {
  SmallCase c;
  const char* name;
};

void PrintTo(const SmallCaseParam& p, std::ostream* os) { *os << p.name; }

class SmallCaseGrid : public ::testing::TestWithParam<SmallCaseParam> {};

TEST_P(SmallCaseGrid, MatchesGeneralToLength9) {
  const auto [r, s] = small_case_shape(GetParam().c);
  for (int x = 0; x + r + s <= 9; ++x) {
    for_each_weak_composition(x, r + s, [&, r = r](std::span<const int> p) {
      const ExponentForm a(std::vector<int>(p.begin(), p.begin() + r));
      const ExponentForm b(std::vector<int>(p.begin() + r, p.end()));
      ASSERT_EQ(expand_small(GetParam().c, p), expand_general(a, b)) << GetParam().name;
    });
  }
}

INSTANTIATE_TEST_SUITE_P(AllCases, SmallCaseGrid,
                         ::testing::Values(SmallCaseParam{SmallCase::kC12, "c12"},
                                           SmallCaseParam{SmallCase::kC13, "c13"},
                                           SmallCaseParam{SmallCase::kC22, "c22"},
                                           SmallCaseParam{SmallCase::kC23, "c23"},
                                           SmallCaseParam{SmallCase::kC33, "c33"}),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(ExpandGeneral, SymmetricAndOracleEqualToLength8) {
  for (int lu = 1; lu <= 7; ++lu) {
    for (int lv = 1; lu + lv <= 8; ++lv) {
      for (int r = 1; r <= lu; ++r) {
        for_each_weak_composition(lu - r, r, [&](std::span<const int> ea) {
          for (int s = 1; s <= lv; ++s) {
            for_each_weak_composition(lv - s, s, [&](std::span<const int> eb) {
              const ExponentForm a(std::vector<int>(ea.begin(), ea.end()));
              const ExponentForm b(std::vector<int>(eb.begin(), eb.end()));
              const LinComb g = expand_general(a, b);
              ASSERT_EQ(g, shuffle_recursive(from_exponent_form(a), from_exponent_form(b)));
              ASSERT_EQ(g, expand_general(b, a));
            });
          }
        });
      }
    }
  }
}

}  // namespace
}  // namespace zetashuffle
