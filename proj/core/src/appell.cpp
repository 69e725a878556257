#include "qmod/appell.hpp"

#include <vector>

#include "qmod/modforms.hpp"
#include "qmod/vachar.hpp"

namespace qmod {

namespace {

using JetTerms = std::vector<std::pair<Rational, BiJet>>;
using RatTerms = std::vector<std::pair<Rational, Rational>>;

void require_n(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("A_n needs n >= 2");
}

// Walks t = t0, t0+1, ... while exponent(t) < bound, checking strict growth.
template <class Exp, class Emit>
void walk(std::int64_t t0, const Rational& bound, Exp&& exponent, Emit&& emit, const char* what) {
  Rational prev;
  for (std::int64_t t = t0;; ++t) {
    Rational e = exponent(t);
    if (t > t0 && !(prev < e)) throw EnumerationInvariant(std::string(what) + ": exponents not increasing");
    prev = e;
    if (!(e < bound)) break;
    emit(t, e);
  }
}

// Two nested walks; the inner minimum is at inner = inner0.
template <class Exp, class Emit>
void walk2(std::int64_t outer0, std::int64_t inner0, const Rational& bound, Exp&& exponent, Emit&& emit,
           const char* what) {
  walk(
      outer0, bound, [&](std::int64_t o) { return exponent(o, inner0); },
      [&](std::int64_t o, const Rational&) {
        walk(
            inner0, bound, [&](std::int64_t i) { return exponent(o, i); },
            [&](std::int64_t i, const Rational& e) { emit(o, i, e); }, what);
      },
      what);
}

}  // namespace

BiJet xy_power(const Rational& a, const Rational& b) { return BiJet(Rational(1), a, b, a * b); }

JetSeries vartheta(std::int64_t n, std::int64_t a, const MonomialArg& arg, const Rational& N) {
  require_n(n);
  const Rational shift(a, 2 * n);
  auto exponent = [&](std::int64_t k) {
    Rational v = Rational(k) + shift;
    return Rational(n, 2) * v * v;
  };
  JetTerms terms;
  auto emit = [&](std::int64_t k) {
    Rational v = Rational(k) + shift;
    BiJet c = bijet_pow(BiJet::x_point(), arg.ex * v) * bijet_pow(BiJet::y_point(), arg.ey * v);
    if (k % 2 != 0) c = -c;
    terms.emplace_back(exponent(k), c);
  };
  // The quadratic is minimized near k = -shift; walk outwards in both directions.
  std::int64_t k0 = to_int64((-shift).floor());
  walk(
      0, N, [&](std::int64_t t) { return exponent(k0 + 1 + t); }, [&](std::int64_t t, const Rational&) { emit(k0 + 1 + t); },
      "theta (upward)");
  walk(
      0, N, [&](std::int64_t t) { return exponent(k0 - t); }, [&](std::int64_t t, const Rational&) { emit(k0 - t); },
      "theta (downward)");
  return JetSeries::from_terms(terms, N);
}

JetSeries kappa2(const QMonomial& x, const QMonomial& y, const Rational& qexp, const Rational& N) {
  if (qexp.sign() <= 0) throw std::invalid_argument("kappa2 needs a positive nome exponent");
  // Term m, power r of u_m = X Y q^(qexp m):
  //   q^(qexp m^2) X^(2m) u_m^r         (u_m of positive q-exponent, r >= 0)
  //  -q^(qexp m^2) X^(2m) u_m^(-r)      (negative q-exponent, r >= 1)
  auto u_exp = [&](std::int64_t m) { return x.q + y.q + qexp * Rational(m); };
  auto base_exp = [&](std::int64_t m) { return qexp * Rational(m * m) + x.q * Rational(2 * m); };
  JetTerms terms;
  auto emit = [&](std::int64_t m, std::int64_t r, bool positive) {
    Rational sr = positive ? Rational(r) : Rational(-r);
    Rational ex = x.ex * Rational(2 * m) + (x.ex + y.ex) * sr;
    Rational ey = x.ey * Rational(2 * m) + (x.ey + y.ey) * sr;
    BiJet c = xy_power(ex, ey);
    terms.emplace_back(base_exp(m) + u_exp(m) * sr, positive ? c : -c);
  };
  // u_exp is increasing in m: expand upwards from the first m where it is positive
  // and downwards from the one below it.
  Rational boundary = -(x.q + y.q) / qexp;  // u_exp(m) = qexp (m - boundary)
  if (boundary.is_integer()) throw PoleEvaluation("kappa2 argument hits a pole at m = " + boundary.to_string());
  std::int64_t m_up = to_int64(boundary.ceil());
  std::int64_t m_down = m_up - 1;
  // Exponent of the (m, r) term along each direction grows in |m| eventually and
  // strictly in r; the outer walk starts at the boundary and moves away from it.
  auto exp_up = [&](std::int64_t t, std::int64_t r) { return base_exp(m_up + t) + u_exp(m_up + t) * Rational(r); };
  auto exp_down = [&](std::int64_t t, std::int64_t r) {
    return base_exp(m_down - t) - u_exp(m_down - t) * Rational(r);
  };
  // The outer minimum over r is at the first r; base_exp may decrease for a few
  // steps near its vertex, so start the walk where it is increasing.
  auto first_increasing = [&](auto&& e, std::int64_t r0) {
    std::int64_t t = 0;
    while (!(e(t, r0) < e(t + 1, r0))) ++t;
    return t;
  };
  std::int64_t t_up = first_increasing(exp_up, 0);
  std::int64_t t_down = first_increasing(exp_down, 1);
  for (std::int64_t t = 0; t < t_up; ++t) {
    walk(
        0, N, [&](std::int64_t r) { return exp_up(t, r); },
        [&](std::int64_t r, const Rational&) { emit(m_up + t, r, true); }, "kappa2 (head, up)");
  }
  for (std::int64_t t = 0; t < t_down; ++t) {
    walk(
        1, N, [&](std::int64_t r) { return exp_down(t, r); },
        [&](std::int64_t r, const Rational&) { emit(m_down - t, r, false); }, "kappa2 (head, down)");
  }
  walk2(
      t_up, 0, N, exp_up, [&](std::int64_t t, std::int64_t r, const Rational&) { emit(m_up + t, r, true); },
      "kappa2 (up)");
  walk2(
      t_down, 1, N, exp_down, [&](std::int64_t t, std::int64_t r, const Rational&) { emit(m_down - t, r, false); },
      "kappa2 (down)");
  return JetSeries::from_terms(terms, N);
}

JetSeries appell_Bn(std::int64_t n, const Rational& N, bool mirror) {
  require_n(n);
  const Rational nn(n);
  if (mirror) {
    return kappa2({-nn / Rational(2), Rational(-1), Rational(0)}, {Rational(-1, 2), Rational(0), nn}, nn, N);
  }
  JetTerms terms;
  const Rational drift = Rational(n - 1, 2);
  // i, j >= 0: exponent n j (j + 1) + i (n j + (n-1)/2).
  walk2(
      0, 0, N, [&](std::int64_t j, std::int64_t i) { return nn * Rational(j * (j + 1)) + Rational(i) * (nn * Rational(j) + drift); },
      [&](std::int64_t j, std::int64_t i, const Rational& e) {
        terms.emplace_back(e, xy_power(Rational(i + 2 * j), Rational(n * i)));
      },
      "B_n (positive quadrant)");
  // i = -a, j = -b with a, b >= 1: exponent n b (b - 1) + a (n b - (n-1)/2).
  walk2(
      1, 1, N, [&](std::int64_t b, std::int64_t a) { return nn * Rational(b * (b - 1)) + Rational(a) * (nn * Rational(b) - drift); },
      [&](std::int64_t b, std::int64_t a, const Rational& e) {
        terms.emplace_back(e, -xy_power(Rational(-a - 2 * b), Rational(-n * a)));
      },
      "B_n (negative quadrant)");
  return JetSeries::from_terms(terms, N);
}

Series mixed_xy_part(const JetSeries& f) {
  const BiJet xy = xy_power(Rational(1), Rational(1));
  return f.scaled(xy).map_coefficients([](const BiJet& c) { return c.c12; });
}

std::string_view to_string(AnMethod m) {
  switch (m) {
    case AnMethod::Thm81: return "thm81";
    case AnMethod::Indef1: return "indef1";
    case AnMethod::Indef2: return "indef2";
    case AnMethod::Closed: return "closed";
    case AnMethod::Appell: return "appell";
  }
  return "?";
}

AnMethod parse_an_method(std::string_view name) {
  for (AnMethod m : {AnMethod::Thm81, AnMethod::Indef1, AnMethod::Indef2, AnMethod::Closed, AnMethod::Appell}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown A_n method '" + std::string(name) + "'");
}

namespace {

Rational an_shift(std::int64_t n) { return Rational(n, 4) - Rational(1, 4 * n); }

Series an_indef1(std::int64_t n, const Rational& N) {
  const Rational nn(n);
  const Rational s1(n - 1, 2 * n), s2(1, n);
  RatTerms terms;
  auto add_term = [&](const Rational& l1, const Rational& l2, int sgn) {
    Rational e = nn * l1 * (l1 + l2);
    terms.emplace_back(e, nn * Rational(sgn) * l2 * (Rational(2) * l1 + l2));
  };
  // l1 = a + s1, l2 = b + s2 with a, b >= 0.
  walk2(
      0, 0, N,
      [&](std::int64_t a, std::int64_t b) {
        Rational l1 = Rational(a) + s1, l2 = Rational(b) + s2;
        return nn * l1 * (l1 + l2);
      },
      [&](std::int64_t a, std::int64_t b, const Rational&) { add_term(Rational(a) + s1, Rational(b) + s2, 1); },
      "indef1 (positive cone)");
  // l1 = s1 - a, l2 = s2 - b with a, b >= 1.
  walk2(
      1, 1, N,
      [&](std::int64_t a, std::int64_t b) {
        Rational l1 = s1 - Rational(a), l2 = s2 - Rational(b);
        return nn * l1 * (l1 + l2);
      },
      [&](std::int64_t a, std::int64_t b, const Rational&) { add_term(s1 - Rational(a), s2 - Rational(b), -1); },
      "indef1 (negative cone)");
  return Series::from_terms(terms, N);
}

Series an_indef2(std::int64_t n, const Rational& N) {
  const Rational q4(n, 4), inv(1, n);
  auto exponent = [&](std::int64_t l1, std::int64_t l2) {
    Rational a = Rational(l1 + 1), b = Rational(l2) + inv;
    return q4 * (a * a - b * b);
  };
  RatTerms terms;
  walk(
      0, N, [&](std::int64_t l1) { return exponent(l1, l1); },
      [&](std::int64_t l1, const Rational&) {
        for (std::int64_t l2 = -l1; l2 <= l1; l2 += 2) {
          Rational e = exponent(l1, l2);
          if (e < N) terms.emplace_back(e, Rational((1 + l1) * (1 + n * l2)));
        }
      },
      "indef2");
  return Series::from_terms(terms, N);
}

Series an_closed(std::int64_t n, const Rational& N) {
  const Rational nn(n);
  const Rational eta_order = nn / Rational(8);
  const Rational num_acc = N + Rational(1, 4 * n);
  const Rational den_acc = N + Rational(1, 2 * n) - nn / Rational(4);

  Series eta3 = power_to([&](const Rational& a) { return eta(nn, a); }, Rational(n, 24), 3, num_acc - eta_order);
  JetSeries th_num = vartheta(n, n, {Rational(2), Rational(0)}, num_acc - eta_order);
  JetSeries numerator = mul(lift<BiJet>(eta3), th_num).truncated(num_acc);

  const Rational th_order(1, 8 * n);
  JetSeries d1 = vartheta(n, 2 * n - 1, {Rational(1), nn}, den_acc - th_order);
  JetSeries d2 = vartheta(n, 2 * n + 1, {Rational(1), -nn}, den_acc - th_order);
  JetSeries denominator = mul(d1, d2).truncated(den_acc);
  if (denominator.is_zero() || !denominator.terms().begin()->second.is_invertible()) {
    throw DenominatorNotUnit("theta denominator has a non-invertible leading jet");
  }
  JetSeries quotient = mul(numerator, invert(denominator)).truncated(N);
  return quotient.map_coefficients([](const BiJet& c) { return c.c12 * Rational(1, 2); });
}

Series an_appell(std::int64_t n, const Rational& N) {
  const Rational shift = an_shift(n);
  return mixed_xy_part(appell_Bn(n, N - shift)).shifted(shift);
}

}  // namespace

Series an_series(std::int64_t n, AnMethod method, const Rational& N) {
  require_n(n);
  switch (method) {
    case AnMethod::Thm81: {
      const Rational shift = an_shift(n);
      return cp_numerator(n, N - shift).shifted(shift);
    }
    case AnMethod::Indef1: return an_indef1(n, N);
    case AnMethod::Indef2: return an_indef2(n, N);
    case AnMethod::Closed: return an_closed(n, N);
    case AnMethod::Appell: return an_appell(n, N);
  }
  throw std::invalid_argument("unknown A_n method");
}

}  // namespace qmod
