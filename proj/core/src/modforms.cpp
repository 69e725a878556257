#include "qmod/modforms.hpp"

#include <mutex>
#include <vector>

namespace qmod {

namespace {

// Memoized Bernoulli numbers; entries are never modified after insertion.
class BernoulliTable {
 public:
  Rational get(int m) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(values_.size()) <= m) extend();
    return values_[static_cast<std::size_t>(m)];
  }

 private:
  void extend() {
    const int m = static_cast<int>(values_.size());
    if (m == 0) {
      values_.emplace_back(1);
      return;
    }
    Rational sum;
    mpz_class binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      sum += Rational(binom) * values_[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    values_.push_back(-sum / Rational(m + 1));
  }

  std::mutex mu_;
  std::vector<Rational> values_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// Integer count of lattice points: largest t >= 0 with t*t*num < den*bound, etc.
// Theta sums enumerate |m| while m^2/8 < n (theta2, m odd) or m^2/2 < n (theta3).
Series theta_sum(const Rational& n, std::int64_t start, std::int64_t step, std::int64_t exp_den) {
  std::vector<std::pair<Rational, Rational>> terms;
  for (std::int64_t m = start;; m += step) {
    Rational e(m * m, exp_den);
    if (!(e < n)) break;
    terms.emplace_back(e, Rational(m == 0 ? 1 : 2));
  }
  return Series::from_terms(terms, n);
}

}  // namespace

FormsGenerator FormsGenerator::eisenstein(int k2) {
  if (k2 < 2 || k2 % 2 != 0) throw std::invalid_argument("Eisenstein weight must be even and >= 2");
  return {Tag::Eisenstein, Rational(1), 0, 0, k2};
}

Rational FormsGenerator::weight() const {
  switch (tag) {
    case Tag::Eta: return Rational(1, 2);
    case Tag::Theta2Pow4:
    case Tag::Theta3Pow4: return Rational(2);
    case Tag::ThetaRS: return Rational(2 * (r + s));
    case Tag::Eisenstein: return Rational(k2);
    case Tag::TriangularDelta: return Rational(1, 2);
  }
  return Rational(0);
}

Series FormsGenerator::expand(const Rational& n) const {
  switch (tag) {
    case Tag::Eta: return qmod::eta(scale, n);
    case Tag::Theta2Pow4: return theta_pow4(ThetaKind::Theta2, n);
    case Tag::Theta3Pow4: return theta_pow4(ThetaKind::Theta3, n);
    case Tag::ThetaRS: return qmod::theta_rs(r, s, n);
    case Tag::Eisenstein: return qmod::eisenstein(k2, n);
    case Tag::TriangularDelta: return qmod::triangular_delta(n);
  }
  throw std::logic_error("unknown generator");
}

std::string FormsGenerator::to_string() const {
  switch (tag) {
    case Tag::Eta: return "eta(" + scale.to_string() + ")";
    case Tag::Theta2Pow4: return "theta2^4";
    case Tag::Theta3Pow4: return "theta3^4";
    case Tag::ThetaRS: return "Theta_{" + std::to_string(r) + "," + std::to_string(s) + "}";
    case Tag::Eisenstein: return "E" + std::to_string(k2);
    case Tag::TriangularDelta: return "Delta";
  }
  return "?";
}

Series eta(const Rational& s, const Rational& n) {
  if (s.sign() <= 0) throw std::invalid_argument("eta scale must be positive");
  Rational lead = s / Rational(24);
  return product_expand(s, s, 1, n - lead).shifted(lead);
}

Series theta2(const Rational& n) { return theta_sum(n, 1, 2, 8); }

Series theta3(const Rational& n) { return theta_sum(n, 0, 1, 2); }

Series theta_pow4(ThetaKind kind, const Rational& n) {
  if (kind == ThetaKind::Theta2) return power_to([](const Rational& a) { return theta2(a); }, Rational(1, 8), 4, n);
  return power_to([](const Rational& a) { return theta3(a); }, Rational(0), 4, n);
}

Series theta_rs(int r, int s, const Rational& n) {
  if (r < 0 || s < 0) throw std::invalid_argument("Theta_{r,s} needs r, s >= 0");
  // theta_3^(4s) has order 0, theta_2^(4r) has order r/2.
  Series a = power_to([](const Rational& acc) { return theta2(acc); }, Rational(1, 8), 4 * r, n);
  Series b = power_to([](const Rational& acc) { return theta3(acc); }, Rational(0), 4 * s, n - Rational(r, 2));
  return mul(a, b).truncated(n);
}

Rational bernoulli(int m) {
  if (m < 0) throw std::invalid_argument("Bernoulli index must be nonnegative");
  return bernoulli_table().get(m);
}

Series eisenstein(int k2, const Rational& n) {
  if (k2 < 2 || k2 % 2 != 0) throw std::invalid_argument("Eisenstein weight must be even and >= 2");
  const std::int64_t top = std::max<std::int64_t>(0, to_int64(n.ceil()));  // q^j for j < n
  std::vector<mpz_class> sigma(static_cast<std::size_t>(top));
  for (std::int64_t d = 1; d < top; ++d) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k2 - 1));
    for (std::int64_t m = d; m < top; m += d) sigma[static_cast<std::size_t>(m)] += p;
  }
  Series::TermMap t;
  Rational c0 = -bernoulli(k2) / Rational(factorial(k2));
  if (Rational(0) < n) t.emplace(0, c0);
  Rational scale = Rational(2) / Rational(factorial(k2 - 1));
  for (std::int64_t m = 1; m < top; ++m) t.emplace_hint(t.end(), m, Rational(sigma[static_cast<std::size_t>(m)]) * scale);
  return Series(1, std::move(t), n);
}

Series triangular_delta(const Rational& n) {
  std::vector<std::pair<Rational, Rational>> terms;
  for (std::int64_t k = 0;; ++k) {
    Rational e(k * (k + 1) / 2);
    if (!(e < n)) break;
    terms.emplace_back(e, Rational(1));
  }
  return Series::from_terms(terms, n);
}

}  // namespace qmod
