#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_util.hpp"
#include "zetashuffle/error.hpp"
#include "zetashuffle/mzv.hpp"
#include "zetashuffle/shuffle.hpp"

namespace zetashuffle {
namespace {

using testing::lc;
using testing::W;

constexpr double kPi = std::numbers::pi;
constexpr double kZeta3 = 1.2020569031595942854;

NumericResult z(const char* index, long terms = kDefaultTerms) { return mzv_eval(parse_mzv_index(index), terms); }

TEST(Mzv, ZetaTwo) {
  const NumericResult r = z("2", 100'000);
  EXPECT_EQ(r.terms_used, 100'000);
  EXPECT_LE(std::abs(r.value - kPi * kPi / 6), r.err_est);
  EXPECT_LT(r.err_est, 1e-4);
}

TEST(Mzv, KnownDepthTwoValues) {
  // Euler: zeta(2,1) = zeta(3); zeta(3,1) = pi^4/360; zeta(2,2) = pi^4/120.
  const double pi4 = std::pow(kPi, 4);
  for (const auto& [index, expected] : {std::pair{"2,1", kZeta3}, {"3,1", pi4 / 360}, {"2,2", pi4 / 120},
                                        std::pair{"3", kZeta3}}) {
    const NumericResult r = z(index, 50'000);
    EXPECT_LE(std::abs(r.value - expected), r.err_est) << index;
    EXPECT_LT(r.err_est, 1e-3) << index;
  }
}

TEST(Mzv, DepthOneIsPartialSum) {
  for (int k = 2; k <= 5; ++k) {
    const long m = 1000;
    long double direct = 0;
    for (long n = m; n >= 1; --n) direct += 1.0L / std::pow(static_cast<long double>(n), k);
    EXPECT_NEAR(mzv_eval(MzvIndex({k}), m).value, static_cast<double>(direct), 1e-12) << k;
  }
}

TEST(Mzv, ZetaTwoOneEqualsZetaThree) {
  // The inner sum grows like log M, so the tail of zeta(2,1) is about
  // (log M + 1) / M; the estimate has to cover it.
  for (long m : {1'000L, 20'000L, 200'000L}) {
    const NumericResult a = z("2,1", m);
    const NumericResult b = z("3", m);
    EXPECT_LE(std::abs(a.value - b.value), a.err_est + b.err_est) << m;
    EXPECT_LE(std::abs(a.value - kZeta3), a.err_est) << m;
  }
}

TEST(Mzv, ErrorShrinksWithMoreTerms) {
  for (const char* index : {"2", "3", "2,1", "2,1,1", "4,1,1", "2,2,2", "3,2,1"}) {
    const NumericResult a = z(index, 5'000);
    const NumericResult b = z(index, 10'000);
    EXPECT_LT(b.err_est, a.err_est) << index;
    EXPECT_LE(std::abs(a.value - b.value), a.err_est) << index;
  }
}

TEST(Mzv, TooFewTerms) {
  try {
    z("2", kMinTerms - 1);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTermsTooSmall);
  }
  EXPECT_NO_THROW(z("2", kMinTerms));
}

TEST(ZetaOfLincomb, LinearAndUnit) {
  const NumericResult one = zeta_of_lincomb(lc({{"1", 3}}));
  EXPECT_EQ(one.value, 3.0);
  EXPECT_EQ(one.err_est, 0.0);
  const NumericResult mixed = zeta_of_lincomb(lc({{"xy", 2}, {"x^2y", -2}}));
  EXPECT_NEAR(mixed.value, 2 * (kPi * kPi / 6 - kZeta3), mixed.err_est + 1e-12);
  EXPECT_EQ(zeta_of_lincomb(LinComb()).value, 0.0);
}

TEST(ZetaOfLincomb, RejectsInadmissible) {
  try {
    zeta_of_lincomb(lc({{"xy", 1}, {"yx", 1}, {"y", 2}}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAdmissible);
    const std::string what = e.what();
    EXPECT_NE(what.find("yx"), std::string::npos);
    EXPECT_NE(what.find("y"), std::string::npos);
  }
}

TEST(Identity, ShuffleRelationHolds) {
  for (const auto& [u, v] : {std::pair{"xy", "xy"}, {"x^2y", "xy"}, {"xy", "xxyy"}, {"xyxy", "x^2y"}}) {
    const IdentityCheck c = identity_check(W(u), W(v));
    EXPECT_LE(c.residual, c.bound()) << u << " " << v;
    EXPECT_DOUBLE_EQ(c.residual, std::abs(c.lhs - c.rhs));
    EXPECT_DOUBLE_EQ(identity_residual(W(u), W(v)), c.residual);
  }
}

TEST(Identity, ZetaTwoSquared) {
  // zeta(2)^2 = 2 zeta(2,2) + 4 zeta(3,1) = pi^4/36.
  const IdentityCheck c = identity_check(W("xy"), W("xy"), 50'000);
  EXPECT_NEAR(c.lhs, std::pow(kPi, 4) / 36, 1e-3);
  EXPECT_NEAR(c.rhs, std::pow(kPi, 4) / 36, 1e-3);
}

TEST(Identity, BoundFloor) {
  IdentityCheck c;
  c.err_est = 1e-9;
  EXPECT_EQ(c.bound(), 1e-6);
  c.err_est = 1e-3;
  EXPECT_DOUBLE_EQ(c.bound(), 3e-3);
}

TEST(Identity, RejectsInadmissible) {
  EXPECT_THROW(identity_check(W("y"), W("xy")), DomainError);
  EXPECT_THROW(identity_check(W("xy"), W("x")), DomainError);
}

}  // namespace
}  // namespace zetashuffle
