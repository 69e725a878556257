#include <gtest/gtest.h>

#include "qmod/bijet.hpp"
#include "qmod/errors.hpp"

using qmod::BiJet;
using qmod::Rational;

TEST(BiJet, SquareRootOfOnePlusE1) {
  EXPECT_EQ(qmod::bijet_pow(BiJet::x_point(), Rational(1, 2)), BiJet(1, Rational(1, 2), 0, 0));
}

TEST(BiJet, SquareOfOnePlusBoth) {
  BiJet j(1, 1, 1, 0);
  EXPECT_EQ(qmod::bijet_pow(j, Rational(2)), BiJet(1, 2, 2, 2));
  EXPECT_EQ(j * j, BiJet(1, 2, 2, 2));
}

TEST(BiJet, MixedPartialOfMonomial) {
  // d^2/dxdy x^a y^b at (1,1) is a*b.
  Rational a(5, 3), b(-7, 2);
  BiJet v = qmod::bijet_pow(BiJet::x_point(), a) * qmod::bijet_pow(BiJet::y_point(), b);
  EXPECT_EQ(v, BiJet(1, a, b, a * b));
}

TEST(BiJet, InverseAndNilpotency) {
  BiJet j(3, -1, 2, 5);
  EXPECT_EQ(j * j.inverse(), BiJet::one());
  BiJet e1(0, 1, 0, 0);
  EXPECT_TRUE((e1 * e1).is_zero());
  EXPECT_FALSE(e1.is_invertible());
}

TEST(BiJet, IntegerPowerOfNonUnitBase) {
  BiJet j(2, 1, 0, 0);
  EXPECT_EQ(qmod::bijet_pow(j, Rational(3)), j * j * j);
  EXPECT_EQ(qmod::bijet_pow(j, Rational(-1)), j.inverse());
}

TEST(BiJet, RejectsBadBases) {
  EXPECT_THROW(qmod::bijet_pow(BiJet(2, 1, 0, 0), Rational(1, 2)), qmod::NonUnitBase);
  EXPECT_THROW(qmod::bijet_pow(BiJet(0, 1, 0, 0), Rational(2)), qmod::NonUnitBase);
}
