#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qmod/rational.hpp"

namespace qmod {

/// Dense univariate polynomial over Q; coefficient i multiplies k^i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// a k + b
  static Polynomial linear(const Rational& a, const Rational& b) { return Polynomial({b, a}); }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(int i) const;
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& k) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& s);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  /// Integer polynomial with coprime coefficients and positive leading
  /// coefficient, a nonzero rational multiple of *this.
  Polynomial primitive() const;

  std::string to_string(const std::string& var = "k") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct RationalRoot {
  Rational value;
  int multiplicity = 0;
};

struct RootReport {
  std::vector<RationalRoot> roots;  // ascending
  Polynomial residual;              // what is left after dividing out every rational root
};

/// All rational roots with multiplicity, via the rational-root theorem on the
/// primitive part. The residual factor has no rational roots.
RootReport rational_roots(const Polynomial& p);

}  // namespace qmod
