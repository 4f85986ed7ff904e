#include <gtest/gtest.h>

#include "qhomfly/qcomb.hpp"

using namespace qhomfly;

namespace {
LaurentQ qq(int e) { return LaurentQ::q_power(e); }
XPoly xx(int e) { return XPoly::x_power(e); }
}  // namespace

TEST(QComb, QInt) {
  EXPECT_TRUE(qint(0).is_zero());
  EXPECT_EQ(qint(2), RatQ(qq(1) + qq(-1)));
  EXPECT_EQ(qint(-1), RatQ(-1));
  for (int r = -5; r <= 5; ++r) EXPECT_EQ(qint(-r), -qint(r));
}

TEST(QComb, QBinomExamples) {
  EXPECT_TRUE(qbinom(5, -1).is_zero());
  EXPECT_EQ(qbinom(4, 2), RatQ(qq(4) + qq(2) + LaurentQ(2) + qq(-2) + qq(-4)));
  for (int r : {-3, 0, 7}) EXPECT_EQ(qbinom(r, 0), RatQ(1));
}

TEST(QComb, QBinomProductIdentity) {
  for (int r = -6; r <= 6; ++r)
    for (int s = 0; s <= 6; ++s) {
      RatQ prod(1);
      for (int k = r - s + 1; k <= r; ++k) prod *= qint(k);
      EXPECT_EQ(qbinom(r, s) * qfactorial(s), prod) << r << "," << s;
      EXPECT_EQ(RatQ(qbinom_laurent(r, s)), qbinom(r, s));
    }
}

TEST(QComb, QBinomPositivity) {
  for (int r = 0; r <= 8; ++r)
    for (int s = 0; s <= r; ++s) {
      const auto c = is_integral_laurent(qbinom(r, s));
      ASSERT_TRUE(c.integral);
      for (const auto& v : c.value.dense()) EXPECT_GE(v, 0);
    }
}

TEST(QComb, XBinomExamples) {
  EXPECT_TRUE(xbinom(3, -2).is_zero());
  EXPECT_EQ(xbinom(0, 1), (xx(1) - xx(-1)) * RatQ(LaurentQ(1), qq(1) - qq(-1)));
  EXPECT_EQ(subst_x_eq_qn(xbinom(0, 1), 3), RatQ(qq(2) + LaurentQ(1) + qq(-2)));
  EXPECT_EQ(xbinom(2, 0), XPoly(1));
}

TEST(QComb, XBinomSpecializationLaw) {
  for (int s = -4; s <= 4; ++s)
    for (int l = 0; l <= 4; ++l)
      for (int n = 0; n <= 5; ++n) EXPECT_EQ(subst_x_eq_qn(xbinom(s, l), n), qbinom(n + s, l)) << s << "," << l << "," << n;
}

TEST(QComb, HeavisideKronecker) {
  EXPECT_EQ(heaviside(0), 1);
  EXPECT_EQ(heaviside(-1), 0);
  EXPECT_EQ(heaviside(5), 1);
  EXPECT_EQ(kronecker(2, 2), 1);
  EXPECT_EQ(kronecker(2, 3), 0);
}
