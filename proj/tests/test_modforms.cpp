#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qmod/modforms.hpp"

using qmod::Rational;
using qmod::Series;

TEST(Modforms, EtaIsShiftedPentagonalSeries) {
  Series e = qmod::eta(Rational(1), Rational(60));
  EXPECT_EQ(e.accuracy(), Rational(60));
  oracle::expect_dense(e, oracle::pentagonal(60), 1, Rational(1, 24));
}

TEST(Modforms, EtaWithScale) {
  // eta(tau/2) = q^(1/48) (q^(1/2); q^(1/2))
  Series e = qmod::eta(Rational(1, 2), Rational(30));
  oracle::expect_dense(e, oracle::pentagonal(60), 2, Rational(1, 48));
}

TEST(Modforms, BernoulliNumbers) {
  // Standard values with B_1 = -1/2.
  EXPECT_EQ(qmod::bernoulli(0), Rational(1));
  EXPECT_EQ(qmod::bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(qmod::bernoulli(2), Rational(1, 6));
  EXPECT_EQ(qmod::bernoulli(3), Rational(0));
  EXPECT_EQ(qmod::bernoulli(4), Rational(-1, 30));
  EXPECT_EQ(qmod::bernoulli(6), Rational(1, 42));
  EXPECT_EQ(qmod::bernoulli(8), Rational(-1, 30));
  EXPECT_EQ(qmod::bernoulli(10), Rational(5, 66));
  EXPECT_EQ(qmod::bernoulli(12), Rational(-691, 2730));
}

TEST(Modforms, EisensteinAgainstDivisorSums) {
  for (int k2 : {2, 4, 6, 8, 10}) {
    Series e = qmod::eisenstein(k2, Rational(40));
    mpz_class fact = 1;
    for (int i = 2; i <= k2; ++i) fact *= i;
    EXPECT_EQ(e.coefficient(Rational(0)), -qmod::bernoulli(k2) / Rational(fact));
    for (int n = 1; n < 40; ++n) {
      Rational expected = Rational(2) * Rational(oracle::sigma(k2 - 1, n)) * Rational(Rational(k2) / Rational(fact));
      EXPECT_EQ(e.coefficient(Rational(n)), expected) << "E" << k2 << " at q^" << n;
    }
  }
}

TEST(Modforms, NormalizationIsAScaledClassicalSeries) {
  // E2 here is -1/12 (1 - 24 sum sigma_1 q^n); E4 is (1/720)(1 + 240 sum sigma_3 q^n).
  Series e2 = qmod::eisenstein(2, Rational(20));
  Series e4 = qmod::eisenstein(4, Rational(20));
  for (int n = 1; n < 20; ++n) {
    EXPECT_EQ(e2.coefficient(Rational(n)), Rational(-1, 12) * Rational(-24) * Rational(oracle::sigma(1, n)));
    EXPECT_EQ(e4.coefficient(Rational(n)), Rational(1, 720) * Rational(240) * Rational(oracle::sigma(3, n)));
  }
}

TEST(Modforms, ThetaFourthPowersCountRepresentations) {
  Series t3 = qmod::theta_pow4(qmod::ThetaKind::Theta3, Rational(20));
  for (int m = 0; m < 40; ++m) EXPECT_EQ(t3.coefficient(Rational(m, 2)), Rational(oracle::four_squares(m)));
  Series t2 = qmod::theta_pow4(qmod::ThetaKind::Theta2, Rational(20));
  EXPECT_EQ(t2.order(), Rational(1, 2));
  for (int m = 0; m + 1 < 20; ++m) {
    EXPECT_EQ(t2.coefficient(Rational(1, 2) + Rational(m)), Rational(16 * oracle::four_triangular(m)));
  }
}

TEST(Modforms, ThetaRSIsAProductOfPowers) {
  Rational n(12);
  Series lhs = qmod::theta_rs(2, 1, n);
  Series t2 = qmod::theta_pow4(qmod::ThetaKind::Theta2, n);
  Series t3 = qmod::theta_pow4(qmod::ThetaKind::Theta3, n);
  Series rhs = mul(mul(t2, t2), t3).truncated(n);
  EXPECT_TRUE(compare(lhs, rhs, Rational(13, 2)).equal());
  EXPECT_EQ(lhs.accuracy(), n);
}

TEST(Modforms, TriangularDelta) {
  Series d = qmod::triangular_delta(Rational(30));
  std::vector<int> tri{0, 1, 3, 6, 10, 15, 21, 28};
  EXPECT_EQ(d.size(), tri.size());
  for (int t : tri) EXPECT_EQ(d.coefficient(Rational(t)), Rational(1));
}

TEST(Modforms, GeneratorWeightsAndExpansion) {
  using G = qmod::FormsGenerator;
  EXPECT_EQ(G::eisenstein(6).weight(), Rational(6));
  EXPECT_EQ(G::theta_rs(1, 2).weight(), Rational(6));
  EXPECT_EQ(G::eta(Rational(1)).weight(), Rational(1, 2));
  EXPECT_EQ(G::eisenstein(4).expand(Rational(10)), qmod::eisenstein(4, Rational(10)));
  EXPECT_THROW(G::eisenstein(3), std::invalid_argument);
}
