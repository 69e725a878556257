#include <gtest/gtest.h>

#include "qmod/cftlevels.hpp"
#include "qmod/errors.hpp"

using qmod::LevelCase;
using qmod::Polynomial;
using qmod::Rational;

namespace {

Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p = Polynomial::constant(Rational(1));
  for (const auto& r : roots) p = p * Polynomial::linear(Rational(1), -r);
  return p;
}

}  // namespace

TEST(Polynomial, ArithmeticAndEvaluation) {
  Polynomial p({Rational(1), Rational(2), Rational(3)});  // 3k^2 + 2k + 1
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(Rational(2)), Rational(17));
  EXPECT_EQ(p(Rational(-1, 3)), Rational(2, 3));
  Polynomial q = p * Polynomial::linear(Rational(1), Rational(-1));
  auto [quot, rem] = q.divmod(Polynomial::linear(Rational(1), Rational(-1)));
  EXPECT_EQ(quot, p);
  EXPECT_TRUE(rem.is_zero());
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.to_string(), "3*k^2 + 2*k + 1");
  EXPECT_THROW(p.divmod(Polynomial()), qmod::DivisionByZero);
}

TEST(Polynomial, PrimitivePart) {
  Polynomial p({Rational(-1, 2), Rational(0), Rational(-3, 4)});
  EXPECT_EQ(p.primitive(), Polynomial({Rational(2), Rational(0), Rational(3)}));
}

TEST(Polynomial, RationalRootsWithMultiplicity) {
  std::vector<Rational> roots{Rational(-23), Rational(-23), Rational(-70, 3), Rational(0), Rational(5, 7)};
  Polynomial p = from_roots(roots) * Polynomial({Rational(1), Rational(0), Rational(1)}) * Rational(-6);
  auto r = qmod::rational_roots(p);
  ASSERT_EQ(r.roots.size(), 4u);
  EXPECT_EQ(r.roots[0].value, Rational(-70, 3));
  EXPECT_EQ(r.roots[1].value, Rational(-23));
  EXPECT_EQ(r.roots[1].multiplicity, 2);
  EXPECT_EQ(r.roots[2].value, Rational(0));
  EXPECT_EQ(r.roots[3].value, Rational(5, 7));
  EXPECT_EQ(r.residual.degree(), 2);  // k^2 + 1 stays
}

TEST(CftLevels, ChargesAtSpecificLevels) {
  auto f4 = LevelCase::f4();
  auto [w, s] = qmod::w_charges(f4, Rational(-23, 4));
  EXPECT_EQ(w, Rational(-33, 2));
  EXPECT_EQ(s, Rational(-33, 2));
  auto at4 = qmod::w_charges(f4, Rational(-4));
  EXPECT_EQ(at4.first, at4.second);

  auto e8 = LevelCase::e8();
  auto [w0, s0] = qmod::w_charges(e8, Rational(0));
  EXPECT_EQ(w0, Rational(-2498));
  EXPECT_EQ(s0, Rational(1050, 352) + Rational(66, 24));
}

TEST(CftLevels, PolesAreRejected) {
  EXPECT_THROW(qmod::w_charges(LevelCase::f4(), Rational(-9)), qmod::PoleEvaluation);
  EXPECT_THROW(qmod::w_charges(LevelCase::f4(), Rational(-21, 4)), qmod::PoleEvaluation);
  EXPECT_THROW(qmod::w_charges(LevelCase::e8(), Rational(-24)), qmod::PoleEvaluation);
}

TEST(CftLevels, F4Levels) {
  auto r = qmod::conformal_levels(LevelCase::f4());
  EXPECT_EQ(r.values(), (std::vector<Rational>{Rational(-23, 4), Rational(-5), Rational(-9, 2), Rational(-4)}));
  EXPECT_FALSE(r.has_irrational_roots());
  EXPECT_EQ(r.degree(), 4);
  for (const auto& root : r.levels) {
    EXPECT_EQ(root.multiplicity, 1);
    EXPECT_TRUE(r.cleared(root.value).is_zero());
  }
}

TEST(CftLevels, E8Levels) {
  auto r = qmod::conformal_levels(LevelCase::e8());
  EXPECT_EQ(r.values(), (std::vector<Rational>{Rational(-119, 5), Rational(-70, 3), Rational(-23)}));
  EXPECT_FALSE(r.has_irrational_roots());
  EXPECT_EQ(r.levels.back().multiplicity, 2);
  for (const auto& root : r.levels) {
    auto [w, s] = qmod::w_charges(LevelCase::e8(), root.value);
    EXPECT_EQ(w, s);
  }
}

TEST(CftLevels, SyntheticCase) {
  LevelCase c{"synthetic",
              {Polynomial::linear(Rational(1), Rational(0)), Polynomial::constant(Rational(1))},
              {{Polynomial(), Polynomial::constant(Rational(1))}}};
  EXPECT_EQ(qmod::conformal_levels(c).values(), (std::vector<Rational>{Rational(0)}));
}

TEST(CftLevels, RootsAtPolesAreDiscarded) {
  // c_W = k/(k-1), c_sug = 1/(k-1): numerator k - 1 vanishes only at the pole.
  LevelCase c{"pole",
              {Polynomial::linear(Rational(1), Rational(0)), Polynomial::linear(Rational(1), Rational(-1))},
              {{Polynomial::constant(Rational(1)), Polynomial::linear(Rational(1), Rational(-1))}}};
  auto r = qmod::conformal_levels(c);
  EXPECT_TRUE(r.levels.empty());
  EXPECT_EQ(r.discarded_poles, std::vector<Rational>{Rational(1)});
}
