#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmod/errors.hpp"
#include "qmod/rational.hpp"

namespace qmod {

/// Exact commutative coefficient ring usable inside a QSeries.
template <class C>
concept CoefficientRing = std::regular<C> && requires(const C& a, const C& b, const Rational& r) {
  { a + b } -> std::same_as<C>;
  { a - b } -> std::same_as<C>;
  { a * b } -> std::same_as<C>;
  { a * r } -> std::same_as<C>;
  { -a } -> std::same_as<C>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_invertible() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::same_as<C>;
  { C::zero() } -> std::same_as<C>;
  { C::one() } -> std::same_as<C>;
};

namespace detail {

/// Smallest integer m with m/L >= acc, i.e. the exclusive bound on stored numerators.
inline std::int64_t numerator_limit(const Rational& acc, std::int64_t L) {
  return to_int64((acc * Rational(L)).ceil());
}

/// m/L as an exact rational.
inline Rational exponent_of(std::int64_t m, std::int64_t L) { return Rational(m, L); }

/// Exponent e written over denominator L; throws if e*L is not integral.
inline std::int64_t numerator_over(const Rational& e, std::int64_t L) {
  Rational scaled = e * Rational(L);
  if (!scaled.is_integer()) throw std::logic_error("exponent not representable over denominator");
  return scaled.to_int64();
}

inline std::int64_t exponent_denominator(const Rational& e) {
  return to_int64(e.denominator());
}

}  // namespace detail

/// Truncated formal series sum_m c_m q^(m/L) with a guaranteed-accuracy bound.
///
/// Every stored exponent is strictly below accuracy(); every coefficient below
/// accuracy() is exact (absent means zero). Zero coefficients are never stored
/// and L is kept reduced, so two series over the same accuracy are equal iff
/// their term tables are equal.
template <CoefficientRing C>
class QSeries {
 public:
  using Coefficient = C;
  using TermMap = std::map<std::int64_t, C>;

  /// The zero series, exact below `acc`.
  explicit QSeries(Rational acc) : acc_(std::move(acc)) {}

  QSeries(std::int64_t L, TermMap terms, Rational acc) : L_(L), terms_(std::move(terms)), acc_(std::move(acc)) {
    if (L_ <= 0) throw std::invalid_argument("exponent denominator must be positive");
    canonicalize();
  }

  static QSeries monomial(const Rational& exponent, C coefficient, Rational acc) {
    std::int64_t L = detail::exponent_denominator(exponent);
    TermMap t;
    t.emplace(detail::numerator_over(exponent, L), std::move(coefficient));
    return QSeries(L, std::move(t), std::move(acc));
  }

  static QSeries constant(C value, Rational acc) { return monomial(Rational(0), std::move(value), std::move(acc)); }

  /// Builds a series from (exponent, coefficient) pairs; repeated exponents are summed.
  static QSeries from_terms(const std::vector<std::pair<Rational, C>>& terms, Rational acc) {
    std::int64_t L = 1;
    for (const auto& [e, c] : terms) L = lcm64(L, detail::exponent_denominator(e));
    TermMap t;
    for (const auto& [e, c] : terms) {
      auto [it, inserted] = t.try_emplace(detail::numerator_over(e, L), c);
      if (!inserted) it->second = it->second + c;
    }
    return QSeries(L, std::move(t), std::move(acc));
  }

  std::int64_t exponent_denominator() const { return L_; }
  const TermMap& terms() const { return terms_; }
  const Rational& accuracy() const { return acc_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Lowest stored exponent; the accuracy for the zero series.
  Rational order() const {
    return terms_.empty() ? acc_ : detail::exponent_of(terms_.begin()->first, L_);
  }

  /// Coefficient of q^e. Throws InsufficientAccuracy when e is not below accuracy().
  C coefficient(const Rational& e) const {
    if (!(e < acc_)) {
      throw InsufficientAccuracy("coefficient at " + e.to_string() + " requested, accuracy is " + acc_.to_string());
    }
    Rational scaled = e * Rational(L_);
    if (!scaled.is_integer()) return C::zero();
    auto it = terms_.find(scaled.to_int64());
    return it == terms_.end() ? C::zero() : it->second;
  }

  /// (exponent, coefficient) pairs in ascending exponent order.
  std::vector<std::pair<Rational, C>> term_list() const {
    std::vector<std::pair<Rational, C>> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.emplace_back(detail::exponent_of(m, L_), c);
    return out;
  }

  /// Same series re-expressed over denominator L (a multiple of the current one).
  TermMap terms_over(std::int64_t L) const {
    if (L % L_ != 0) throw std::logic_error("target denominator is not a multiple");
    std::int64_t f = L / L_;
    if (f == 1) return terms_;
    TermMap out;
    for (const auto& [m, c] : terms_) out.emplace_hint(out.end(), m * f, c);
    return out;
  }

  QSeries truncated(const Rational& n) const {
    if (!(n < acc_)) return *this;
    return QSeries(L_, terms_, n);
  }

  /// Multiplication by q^s.
  QSeries shifted(const Rational& s) const {
    std::int64_t L = lcm64(L_, detail::exponent_denominator(s));
    std::int64_t d = detail::numerator_over(s, L);
    TermMap out;
    for (auto& [m, c] : terms_over(L)) out.emplace_hint(out.end(), m + d, c);
    return QSeries(L, std::move(out), acc_ + s);
  }

  template <class F>
  auto map_coefficients(F&& fn) const -> QSeries<std::decay_t<decltype(fn(std::declval<const C&>()))>> {
    using D = std::decay_t<decltype(fn(std::declval<const C&>()))>;
    typename QSeries<D>::TermMap out;
    for (const auto& [m, c] : terms_) out.emplace_hint(out.end(), m, fn(c));
    return QSeries<D>(L_, std::move(out), acc_);
  }

  QSeries operator-() const {
    TermMap out;
    for (const auto& [m, c] : terms_) out.emplace_hint(out.end(), m, -c);
    return QSeries(L_, std::move(out), acc_);
  }

  QSeries scaled(const C& s) const {
    TermMap out;
    for (const auto& [m, c] : terms_) out.emplace_hint(out.end(), m, c * s);
    return QSeries(L_, std::move(out), acc_);
  }

  QSeries scaled(const Rational& s) const requires(!std::same_as<C, Rational>) {
    TermMap out;
    for (const auto& [m, c] : terms_) out.emplace_hint(out.end(), m, c * s);
    return QSeries(L_, std::move(out), acc_);
  }

  friend QSeries operator+(const QSeries& f, const QSeries& g) { return add(f, g); }
  friend QSeries operator-(const QSeries& f, const QSeries& g) { return add(f, -g); }
  friend QSeries operator*(const QSeries& f, const QSeries& g) { return mul(f, g); }

  /// Structural equality (same accuracy and same term table).
  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.acc_ == b.acc_ && a.L_ == b.L_ && a.terms_ == b.terms_;
  }

  // Binary operations (friends so they can reach the representation).
  friend QSeries add(const QSeries& f, const QSeries& g) {
    std::int64_t L = lcm64(f.L_, g.L_);
    Rational acc = min(f.acc_, g.acc_);
    std::int64_t limit = detail::numerator_limit(acc, L);
    TermMap out = f.terms_over(L);
    for (auto it = out.lower_bound(limit); it != out.end();) it = out.erase(it);
    for (auto& [m, c] : g.terms_over(L)) {
      if (m >= limit) break;
      auto [it, inserted] = out.try_emplace(m, c);
      if (!inserted) it->second = it->second + c;
    }
    return QSeries(L, std::move(out), std::move(acc));
  }

  friend QSeries mul(const QSeries& f, const QSeries& g) {
    Rational acc = min(f.acc_ + g.order(), g.acc_ + f.order());
    std::int64_t L = lcm64(f.L_, g.L_);
    if (f.terms_.empty() || g.terms_.empty()) return QSeries(acc);
    std::int64_t limit = detail::numerator_limit(acc, L);
    const TermMap ft = f.terms_over(L);
    const TermMap gt = g.terms_over(L);
    const std::vector<std::pair<std::int64_t, C>> a(ft.begin(), ft.end());
    const std::vector<std::pair<std::int64_t, C>> b(gt.begin(), gt.end());
    const std::int64_t lo = a.front().first + b.front().first;
    TermMap out;
    if (limit <= lo) return QSeries(L, std::move(out), std::move(acc));
    const std::int64_t span = limit - lo;
    const bool dense = span <= static_cast<std::int64_t>(4 * a.size() * b.size() + 4096);
    if (dense) {
      std::vector<C> acc_terms(static_cast<std::size_t>(span), C::zero());
      std::vector<bool> touched(static_cast<std::size_t>(span), false);
      for (const auto& [ma, ca] : a) {
        if (ma + b.front().first >= limit) break;
        for (const auto& [mb, cb] : b) {
          std::int64_t m = ma + mb;
          if (m >= limit) break;
          auto k = static_cast<std::size_t>(m - lo);
          acc_terms[k] = acc_terms[k] + ca * cb;
          touched[k] = true;
        }
      }
      for (std::size_t k = 0; k < acc_terms.size(); ++k) {
        if (touched[k] && !acc_terms[k].is_zero()) {
          out.emplace_hint(out.end(), lo + static_cast<std::int64_t>(k), std::move(acc_terms[k]));
        }
      }
    } else {
      for (const auto& [ma, ca] : a) {
        if (ma + b.front().first >= limit) break;
        for (const auto& [mb, cb] : b) {
          std::int64_t m = ma + mb;
          if (m >= limit) break;
          auto [it, inserted] = out.try_emplace(m, ca * cb);
          if (!inserted) it->second = it->second + ca * cb;
        }
      }
    }
    return QSeries(L, std::move(out), std::move(acc));
  }

  /// q-exponent substitution q -> q^s (s > 0).
  friend QSeries scale_exponents(const QSeries& f, const Rational& s) {
    if (s.sign() <= 0) throw std::invalid_argument("exponent scale must be positive");
    std::int64_t p = s.numerator().get_si();
    std::int64_t r = to_int64(s.denominator());
    TermMap out;
    for (const auto& [m, c] : f.terms_) out.emplace_hint(out.end(), m * p, c);
    return QSeries(f.L_ * r, std::move(out), f.acc_ * s);
  }

  /// q d/dq: the coefficient of q^e is multiplied by e.
  friend QSeries q_derivative(const QSeries& f) {
    TermMap out;
    for (const auto& [m, c] : f.terms_) {
      if (m == 0) continue;
      out.emplace_hint(out.end(), m, c * Rational(m, f.L_));
    }
    return QSeries(f.L_, std::move(out), f.acc_);
  }

  /// Multiplicative inverse; accuracy becomes acc - 2v for lowest exponent v.
  friend QSeries invert(const QSeries& f) {
    if (f.terms_.empty()) throw ZeroLeadingTerm("inverting a series with no term below its accuracy");
    const auto& [vm, lead] = *f.terms_.begin();
    if (!lead.is_invertible()) {
      throw NonInvertibleLeadingCoefficient("leading coefficient of the series is not invertible");
    }
    const std::int64_t L = f.L_;
    const Rational v = detail::exponent_of(vm, L);
    const Rational acc = f.acc_ - v - v;
    // Number of output slots: exponents -v + k/L below acc, i.e. k/L < acc_f - v.
    const std::int64_t slots = detail::numerator_limit(f.acc_ - v, L);
    TermMap out;
    if (slots <= 0) return QSeries(L, std::move(out), acc);
    std::vector<std::pair<std::int64_t, C>> tail;  // (offset from v, coefficient), offsets >= 1
    for (auto it = std::next(f.terms_.begin()); it != f.terms_.end(); ++it) {
      tail.emplace_back(it->first - vm, it->second);
    }
    const C inv_lead = lead.inverse();
    std::vector<C> g(static_cast<std::size_t>(slots), C::zero());
    g[0] = inv_lead;
    for (std::int64_t k = 1; k < slots; ++k) {
      C sum = C::zero();
      bool any = false;
      for (const auto& [j, c] : tail) {
        if (j > k) break;
        const C& prev = g[static_cast<std::size_t>(k - j)];
        if (prev.is_zero()) continue;
        sum = sum + c * prev;
        any = true;
      }
      if (any) g[static_cast<std::size_t>(k)] = -(sum * inv_lead);
    }
    for (std::int64_t k = 0; k < slots; ++k) {
      auto& c = g[static_cast<std::size_t>(k)];
      if (!c.is_zero()) out.emplace_hint(out.end(), k - vm, std::move(c));
    }
    return QSeries(L, std::move(out), acc);
  }

 private:
  void canonicalize() {
    std::int64_t limit = detail::numerator_limit(acc_, L_);
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->first >= limit || it->second.is_zero()) {
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
    std::int64_t g = L_;
    for (const auto& [m, c] : terms_) {
      g = gcd64(g, m);
      if (g == 1) break;
    }
    if (g > 1) {
      TermMap reduced;
      for (auto& [m, c] : terms_) reduced.emplace_hint(reduced.end(), m / g, std::move(c));
      terms_ = std::move(reduced);
      L_ /= g;
    }
  }

  std::int64_t L_ = 1;
  TermMap terms_;
  Rational acc_;
};

using Series = QSeries<Rational>;

/// f^e for integer e (negative exponents go through invert).
template <CoefficientRing C>
QSeries<C> power(const QSeries<C>& f, std::int64_t e) {
  if (e < 0) return power(invert(f), -e);
  if (e == 0) return QSeries<C>::constant(C::one(), f.accuracy() - f.order());
  QSeries<C> result(f.accuracy());
  QSeries<C> base = f;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      result = first ? base : mul(result, base);
      first = false;
    }
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

/// Outcome of comparing two series below a bound.
template <CoefficientRing C>
struct Comparison {
  struct Mismatch {
    Rational exponent;
    C lhs;
    C rhs;
  };
  std::optional<Mismatch> mismatch;

  bool equal() const { return !mismatch.has_value(); }
};

/// Compares f and g on every exponent strictly below n.
template <CoefficientRing C>
Comparison<C> compare(const QSeries<C>& f, const QSeries<C>& g, const Rational& n) {
  if (f.accuracy() < n || g.accuracy() < n) {
    throw InsufficientAccuracy("compare below " + n.to_string() + " but accuracies are " +
                               f.accuracy().to_string() + " and " + g.accuracy().to_string());
  }
  std::int64_t L = lcm64(f.exponent_denominator(), g.exponent_denominator());
  std::int64_t limit = detail::numerator_limit(n, L);
  auto a = f.terms_over(L);
  auto b = g.terms_over(L);
  auto ia = a.begin();
  auto ib = b.begin();
  const C zero = C::zero();
  while (ia != a.end() || ib != b.end()) {
    std::int64_t ma = ia == a.end() ? limit : ia->first;
    std::int64_t mb = ib == b.end() ? limit : ib->first;
    std::int64_t m = std::min(ma, mb);
    if (m >= limit) break;
    const C& ca = ma == m ? ia->second : zero;
    const C& cb = mb == m ? ib->second : zero;
    if (!(ca == cb)) {
      return Comparison<C>{typename Comparison<C>::Mismatch{Rational(m, L), ca, cb}};
    }
    if (ma == m) ++ia;
    if (mb == m) ++ib;
  }
  return Comparison<C>{};
}

/// Expansion of prod_{n>=1} (1 - q^(a + b(n-1)))^e, exact below n_acc.
/// Throws NonpositiveExponentStep unless a > 0 and b > 0.
Series product_expand(const Rational& a, const Rational& b, std::int64_t e, const Rational& n_acc);

/// Exact lift of a rational series into another coefficient ring.
template <CoefficientRing D>
QSeries<D> lift(const Series& f) {
  return f.map_coefficients([](const Rational& c) { return D(c); });
}

}  // namespace qmod
