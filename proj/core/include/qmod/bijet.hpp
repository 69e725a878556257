#pragma once

#include <iosfwd>
#include <string>

#include "qmod/rational.hpp"

namespace qmod {

/// Element c0 + c1*e1 + c2*e2 + c12*e1*e2 of Q[e1,e2]/(e1^2, e2^2).
///
/// Evaluating a function of (x, y) at x = 1 + e1, y = 1 + e2 gives its value
/// at (1, 1) in c0, the two first partials in c1/c2 and the mixed partial
/// d^2/dxdy in c12.
struct BiJet {
  Rational c0;
  Rational c1;
  Rational c2;
  Rational c12;

  BiJet() = default;
  BiJet(Rational a0, Rational a1, Rational a2, Rational a12)
      : c0(std::move(a0)), c1(std::move(a1)), c2(std::move(a2)), c12(std::move(a12)) {}
  explicit BiJet(Rational constant) : c0(std::move(constant)) {}

  static BiJet zero() { return BiJet(); }
  static BiJet one() { return BiJet(Rational(1)); }
  /// 1 + e1, the substitution point for x.
  static BiJet x_point() { return BiJet(1, 1, 0, 0); }
  /// 1 + e2, the substitution point for y.
  static BiJet y_point() { return BiJet(1, 0, 1, 0); }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero() && c12.is_zero(); }
  bool is_invertible() const { return !c0.is_zero(); }
  BiJet inverse() const;

  BiJet& operator+=(const BiJet& o);
  BiJet& operator-=(const BiJet& o);
  BiJet& operator*=(const BiJet& o);
  BiJet& operator*=(const Rational& s);

  friend BiJet operator+(BiJet a, const BiJet& b) { return a += b; }
  friend BiJet operator-(BiJet a, const BiJet& b) { return a -= b; }
  friend BiJet operator*(BiJet a, const BiJet& b) { return a *= b; }
  friend BiJet operator*(BiJet a, const Rational& s) { return a *= s; }
  friend BiJet operator-(const BiJet& a) { return BiJet(-a.c0, -a.c1, -a.c2, -a.c12); }
  friend bool operator==(const BiJet&, const BiJet&) = default;

  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const BiJet& j);

/// j^r for rational r. Integer r needs c0 != 0; non-integer r needs c0 == 1.
/// Throws NonUnitBase otherwise.
BiJet bijet_pow(const BiJet& j, const Rational& r);

}  // namespace qmod
