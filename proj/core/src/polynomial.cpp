#include "qmod/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qmod/errors.hpp"

namespace qmod {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& k) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * k + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b * Rational(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Rational& s) {
  std::vector<Rational> c = a.c_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem = c_;
  int dd = d.degree();
  if (degree() < dd) return {Polynomial(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  Rational inv = d.leading().inverse();
  for (int i = degree(); i >= dd; --i) {
    Rational f = rem[static_cast<std::size_t>(i)] * inv;
    quot[static_cast<std::size_t>(i - dd)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  mpz_class l = 1;
  for (const auto& x : c_) l = lcm(l, x.denominator());
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  for (const auto& x : c_) {
    mpz_class v = x.numerator() * (l / x.denominator());
    g = gcd(g, v);
    ints.push_back(v);
  }
  if (c_.back().sign() < 0) g = -g;
  std::vector<Rational> out;
  for (auto& v : ints) out.emplace_back(mpz_class(v / g));
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (!unit || i == 0) os << mag;
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// Positive divisors of |n| (n != 0) by trial division.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> factors;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factors) {
    std::size_t base = out.size();
    mpz_class pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  return out;
}

}  // namespace

RootReport rational_roots(const Polynomial& p) {
  RootReport report;
  if (p.degree() <= 0) {
    report.residual = p;
    return report;
  }
  Polynomial rest = p.primitive();
  // Zero roots first, so the constant term used below is nonzero.
  int zero_mult = 0;
  while (rest.degree() > 0 && rest.coefficient(0).is_zero()) {
    rest = rest.divmod(Polynomial::linear(1, 0)).first;
    ++zero_mult;
  }
  if (zero_mult > 0) report.roots.push_back({Rational(0), zero_mult});
  if (rest.degree() > 0) {
    std::set<Rational> candidates;
    for (const auto& a : divisors(rest.coefficient(0).numerator())) {
      for (const auto& b : divisors(rest.leading().numerator())) {
        candidates.insert(Rational(a, b));
        candidates.insert(-Rational(a, b));
      }
    }
    for (const auto& r : candidates) {
      int mult = 0;
      while (rest.degree() > 0 && rest(r).is_zero()) {
        rest = rest.divmod(Polynomial::linear(1, -r)).first;
        ++mult;
      }
      if (mult > 0) report.roots.push_back({r, mult});
    }
  }
  std::sort(report.roots.begin(), report.roots.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  report.residual = rest;
  return report;
}

}  // namespace qmod
