#include "qmod/bijet.hpp"

#include <ostream>

#include "qmod/errors.hpp"

namespace qmod {

BiJet BiJet::inverse() const {
  if (c0.is_zero()) throw NonInvertibleLeadingCoefficient("bi-jet with zero constant part");
  // (c0 + n)^-1 = c0^-1 - n/c0^2 + n^2/c0^3 with n^2 = 2 c1 c2 e1e2.
  Rational inv = c0.inverse();
  Rational inv2 = inv * inv;
  return BiJet(inv, -c1 * inv2, -c2 * inv2, -c12 * inv2 + Rational(2) * c1 * c2 * inv2 * inv);
}

BiJet& BiJet::operator+=(const BiJet& o) {
  c0 += o.c0;
  c1 += o.c1;
  c2 += o.c2;
  c12 += o.c12;
  return *this;
}

BiJet& BiJet::operator-=(const BiJet& o) {
  c0 -= o.c0;
  c1 -= o.c1;
  c2 -= o.c2;
  c12 -= o.c12;
  return *this;
}

BiJet& BiJet::operator*=(const BiJet& o) {
  Rational n12 = c0 * o.c12 + c12 * o.c0 + c1 * o.c2 + c2 * o.c1;
  Rational n1 = c0 * o.c1 + c1 * o.c0;
  Rational n2 = c0 * o.c2 + c2 * o.c0;
  c0 *= o.c0;
  c1 = std::move(n1);
  c2 = std::move(n2);
  c12 = std::move(n12);
  return *this;
}

BiJet& BiJet::operator*=(const Rational& s) {
  c0 *= s;
  c1 *= s;
  c2 *= s;
  c12 *= s;
  return *this;
}

std::string BiJet::to_string() const {
  return "(" + c0.to_string() + ", " + c1.to_string() + ", " + c2.to_string() + ", " +
         c12.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const BiJet& j) { return os << j.to_string(); }

BiJet bijet_pow(const BiJet& j, const Rational& r) {
  if (j.c0.is_zero()) throw NonUnitBase("bi-jet power with zero constant part");
  Rational scale(1);
  Rational u1 = j.c1, u2 = j.c2, u12 = j.c12;
  if (j.c0 != Rational(1)) {
    if (!r.is_integer()) {
      throw NonUnitBase("non-integer power of a bi-jet needs constant part 1, got " + j.c0.to_string());
    }
    scale = j.c0.pow(r.to_int64());
    Rational inv = j.c0.inverse();
    u1 *= inv;
    u2 *= inv;
    u12 *= inv;
  }
  // (1+u)^r = 1 + r u + r(r-1)/2 u^2, and u^2 = 2 u1 u2 e1e2.
  BiJet out(Rational(1), r * u1, r * u2, r * u12 + r * (r - Rational(1)) * u1 * u2);
  return out * scale;
}

}  // namespace qmod
