#include "qmod/vachar.hpp"

#include <functional>

namespace qmod {

namespace {

using TermList = std::vector<std::pair<Rational, Rational>>;

void require_nonzero(std::int64_t p_prime, std::int64_t p) {
  if (p_prime == 0 || p == 0) throw ZeroParameter("central charge parameters must be nonzero");
}

Series inverse_euler_power(std::int64_t power, const Rational& n) {
  return product_expand(Rational(1), Rational(1), -power, n);
}

// Multiplies a finite numerator (exact) by 1/(q;q)^power, then by q^prefactor.
// The result is exact below n.
Series over_euler_power(const TermList& numerator, std::int64_t power, const Rational& prefactor,
                        const Rational& n) {
  if (numerator.empty()) return Series(n);
  Rational lowest = numerator.front().first;
  for (const auto& [e, c] : numerator) lowest = min(lowest, e);
  const Rational target = n - prefactor;  // accuracy needed before the shift
  Series num = Series::from_terms(numerator, max(target, lowest + Rational(1)));
  if (num.is_zero()) return Series(n);
  Series den = inverse_euler_power(power, target - num.order());
  return mul(num, den).truncated(target).shifted(prefactor);
}

// Enumerates sum_{outer >= 0} sum_{inner >= 0} coef * q^exponent, where the
// exponent is strictly increasing in both indices. Monotonicity is checked at
// every step; the loops stop at the first exponent >= bound.
void enumerate_monotone(const Rational& bound, const std::function<Rational(std::int64_t, std::int64_t)>& exponent,
                        const std::function<Rational(std::int64_t, std::int64_t)>& coef, TermList& out,
                        const char* what) {
  Rational prev_outer;
  for (std::int64_t outer = 0;; ++outer) {
    Rational start = exponent(outer, 0);
    if (outer > 0 && !(prev_outer < start)) {
      throw EnumerationInvariant(std::string(what) + ": exponent not increasing in the outer index");
    }
    prev_outer = start;
    if (!(start < bound)) {
      if (!(start < exponent(outer + 1, 0))) {
        throw EnumerationInvariant(std::string(what) + ": exponent not increasing past the cutoff");
      }
      break;
    }
    Rational prev = start;
    for (std::int64_t inner = 0;; ++inner) {
      Rational e = inner == 0 ? start : exponent(outer, inner);
      if (inner > 0 && !(prev < e)) {
        throw EnumerationInvariant(std::string(what) + ": exponent not increasing in the inner index");
      }
      prev = e;
      if (!(e < bound)) break;
      out.emplace_back(e, coef(outer, inner));
    }
  }
}

// One row sum_{l >= l0} sum_{i = i0..l} coef(i) q^{exponent(l, i)}, where the
// exponent decreases in i, so the minimum over a row is at i = l.
struct TriangularRow {
  std::int64_t l0;
  std::int64_t i0;
  std::function<Rational(std::int64_t)> coef;
  std::function<Rational(std::int64_t, std::int64_t)> exponent;
};

void enumerate_rows(const std::vector<TriangularRow>& rows, const Rational& bound, TermList& out, const char* what) {
  for (const auto& row : rows) {
    // Reindex as outer = l - l0, inner = l - i (so i runs down from l to i0).
    enumerate_monotone(
        bound,
        [&](std::int64_t outer, std::int64_t inner) {
          std::int64_t l = outer + row.l0;
          std::int64_t i = l - inner;
          if (i < row.i0) return bound + Rational(inner);  // past the row: treat as out of range
          return row.exponent(l, i);
        },
        [&](std::int64_t outer, std::int64_t inner) { return row.coef(outer + row.l0 - inner); }, out, what);
  }
}

Rational q(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

}  // namespace

Rational central_charge(std::int64_t p_prime, std::int64_t p) {
  require_nonzero(p_prime, p);
  return Rational(1) - Rational(6 * (p - p_prime) * (p - p_prime), p * p_prime);
}

Rational conformal_weight(std::int64_t p_prime, std::int64_t p, std::int64_t r, std::int64_t s) {
  require_nonzero(p_prime, p);
  std::int64_t a = s * p - r * p_prime;
  return Rational(a * a - (p - p_prime) * (p - p_prime), 4 * p * p_prime);
}

Rational cp_central_charge(std::int64_t n) {
  if (n == 0) throw ZeroParameter("C_n needs n != 0");
  return Rational(6 * (1 + n - n * n), n);
}

Series vir_char(std::int64_t p, std::int64_t i, const Rational& n) {
  if (p < 2) throw std::invalid_argument("vir_char needs p >= 2");
  if (i < 1) throw std::invalid_argument("vir_char needs i >= 1");
  Rational pre = -central_charge(1, p) / Rational(24);
  TermList num{{conformal_weight(1, p, 1, i), Rational(1)}, {conformal_weight(1, p, 1, -i), Rational(-1)}};
  return over_euler_power(num, 1, pre, n);
}

namespace {

void check_affine_p(std::int64_t p) {
  if (p != 3 && p != 4) throw std::invalid_argument("affine_neg_char is defined for p in {3, 4}");
}

Rational affine_prefactor(std::int64_t p) { return Rational(-(p + 2), 8 * p); }

TermList affine_numerator(std::int64_t p, AffineFamily family, std::int64_t l) {
  check_affine_p(p);
  if (l < 0) throw std::invalid_argument("affine_neg_char needs l >= 0");
  TermList t;
  if (family == AffineFamily::A) {
    for (std::int64_t i = 0; i <= l; ++i) t.emplace_back(q(-i * (p * i + 1)), q(2 * p * i + 1));
    for (std::int64_t i = 1; i <= l; ++i) t.emplace_back(q(-i * (p * i - 1)), q(-(2 * p * i - 1)));
  } else {
    if (l == 0) throw EmptySum("family B affine character needs l >= 1");
    for (std::int64_t i = 1; i <= l; ++i) {
      t.emplace_back(q(-(2 * i - 1) * (2 * p * i - (p - 2)), 4), q(2 * p * i - (p - 1)));
      t.emplace_back(q(-(2 * i - 1) * (2 * p * i - (p + 2)), 4), q(-(2 * p * i - (p + 1))));
    }
  }
  return t;
}

}  // namespace

Series affine_neg_char(std::int64_t p, AffineFamily family, std::int64_t l, const Rational& n) {
  return over_euler_power(affine_numerator(p, family, l), 3, affine_prefactor(p), n);
}

Rational affine_neg_char_order(std::int64_t p, AffineFamily family, std::int64_t l) {
  check_affine_p(p);
  if (family == AffineFamily::A) return affine_prefactor(p) - q(l * (p * l + 1));
  if (l == 0) throw EmptySum("family B affine character needs l >= 1");
  return affine_prefactor(p) - q((2 * l - 1) * (2 * p * l - (p - 2)), 4);
}

Series admissible_char(std::int64_t n_param, std::int64_t l, const Rational& n) {
  if (n_param < 2) throw std::invalid_argument("admissible_char needs n >= 2");
  if (l < 0) throw std::invalid_argument("admissible_char needs l >= 0");
  Rational pre = q(2 * n_param - 1, 8) + q(n_param * l * (l + 2), 4);
  return over_euler_power({{Rational(0), q(l + 1)}}, 3, pre, n);
}

Series weyl_char(std::int64_t m, const Rational& n) {
  if (m < 1) throw std::invalid_argument("weyl_char needs m >= 1");
  Rational pre = q(m, 24);
  return product_expand(q(1, 2), q(1), -2 * m, n - pre).shifted(pre);
}

Series sl3_char(const Rational& n) {
  Rational pre = q(1, 3);
  Rational target = n - pre;
  return mul(product_expand(q(2), q(2), 8, target), product_expand(q(1), q(1), -8, target)).shifted(pre);
}

namespace {

Series cp_numerator_impl(std::int64_t nn, const Rational& n, bool as_printed) {
  if (nn < 2) throw std::invalid_argument("C_n needs n >= 2");
  TermList t;
  const Rational half(1, 2);
  enumerate_monotone(
      n, [&](std::int64_t k, std::int64_t i) { return q(k * (k + 1) * nn + i * (2 * k * nn + nn - 1)); },
      [&](std::int64_t k, std::int64_t i) { return q((1 + 2 * (i + k)) * (1 + 2 * i * nn)); }, t, "C_n block 1");
  enumerate_monotone(
      n, [&](std::int64_t k, std::int64_t i) { return q(k * (1 + k) * nn + (i + 1) * (1 + nn + 2 * k * nn)); },
      [&](std::int64_t k, std::int64_t i) {
        return q(-(3 + 2 * (i + k)) * (as_printed ? 1 + 2 * i * nn : 2 * (i + 1) * nn - 1));
      },
      t, "C_n block 2");
  enumerate_monotone(
      n,
      [&](std::int64_t k, std::int64_t i) {
        return half + (q(k * k) - half) * q(nn) + q((1 + i) * (-1 + nn + 2 * k * nn));
      },
      [&](std::int64_t k, std::int64_t i) { return q(2 * (1 + i + k) * (1 + nn + 2 * i * nn)); }, t, "C_n block 3");
  enumerate_monotone(
      n,
      [&](std::int64_t k, std::int64_t i) {
        return -half + (q(k * k) - half) * q(nn) + q((1 + i) * (1 + nn + 2 * k * nn));
      },
      [&](std::int64_t k, std::int64_t i) { return q(-2 * (1 + i + k) * (-1 + nn + 2 * i * nn)); }, t,
      "C_n block 4");
  return Series::from_terms(t, n);
}

}  // namespace

Series cp_numerator(std::int64_t nn, const Rational& n) { return cp_numerator_impl(nn, n, false); }

Series cp_numerator_as_printed(std::int64_t nn, const Rational& n) { return cp_numerator_impl(nn, n, true); }

Series cp_char(std::int64_t nn, const Rational& n) {
  Rational pre = -cp_central_charge(nn) / Rational(24);
  Rational target = n - pre;
  return mul(cp_numerator(nn, target), inverse_euler_power(6, target)).shifted(pre);
}

Series bq_series(const Rational& n) {
  std::vector<TriangularRow> rows{
      {0, 0, [](std::int64_t i) { return q(6 * i + 1); },
       [](std::int64_t l, std::int64_t i) { return q(l * (3 * l + 2) - i * (3 * i + 1)); }},
      {0, 0, [](std::int64_t i) { return q(-(6 * i + 1)); },
       [](std::int64_t l, std::int64_t i) { return q((l + 1) * (3 * l + 1) - i * (3 * i + 1)); }},
      {1, 1, [](std::int64_t i) { return q(-(6 * i - 1)); },
       [](std::int64_t l, std::int64_t i) { return q(l * (3 * l + 2) - i * (3 * i - 1)); }},
      {1, 1, [](std::int64_t i) { return q(6 * i - 1); },
       [](std::int64_t l, std::int64_t i) { return q((l + 1) * (3 * l + 1) - i * (3 * i - 1)); }},
      {1, 1, [](std::int64_t i) { return q(6 * i - 2); },
       [](std::int64_t l, std::int64_t i) { return q((2 * l - 1) * (6 * l + 1) - (2 * i - 1) * (6 * i - 1), 4); }},
      {1, 1, [](std::int64_t i) { return q(-(6 * i - 2)); },
       [](std::int64_t l, std::int64_t i) { return q((2 * l + 1) * (6 * l - 1) - (2 * i - 1) * (6 * i - 1), 4); }},
      {1, 1, [](std::int64_t i) { return q(-(6 * i - 4)); },
       [](std::int64_t l, std::int64_t i) { return q((2 * l - 1) * (6 * l + 1) - (2 * i - 1) * (6 * i - 5), 4); }},
      {1, 1, [](std::int64_t i) { return q(6 * i - 4); },
       [](std::int64_t l, std::int64_t i) { return q((2 * l + 1) * (6 * l - 1) - (2 * i - 1) * (6 * i - 5), 4); }},
  };
  TermList t;
  enumerate_rows(rows, n, t, "B[q]");
  return Series::from_terms(t, n);
}

Series cq_series(const Rational& n) {
  std::vector<TriangularRow> rows{
      {0, 0, [](std::int64_t i) { return q(8 * i + 1); },
       [](std::int64_t l, std::int64_t i) { return q(l * (4 * l + 3) - i * (4 * i + 1)); }},
      {0, 0, [](std::int64_t i) { return q(-(8 * i + 1)); },
       [](std::int64_t l, std::int64_t i) { return q((l + 1) * (4 * l + 1) - i * (4 * i + 1)); }},
      {1, 1, [](std::int64_t i) { return q(-(8 * i - 1)); },
       [](std::int64_t l, std::int64_t i) { return q(l * (4 * l + 3) - i * (4 * i - 1)); }},
      {1, 1, [](std::int64_t i) { return q(8 * i - 1); },
       [](std::int64_t l, std::int64_t i) { return q((l + 1) * (4 * l + 1) - i * (4 * i - 1)); }},
      {1, 1, [](std::int64_t i) { return q(8 * i - 3); },
       [](std::int64_t l, std::int64_t i) { return q((2 * l - 1) * (4 * l + 1) - (2 * i - 1) * (4 * i - 1), 2); }},
      {1, 1, [](std::int64_t i) { return q(-(8 * i - 3)); },
       [](std::int64_t l, std::int64_t i) { return q((2 * l + 1) * (4 * l - 1) - (2 * i - 1) * (4 * i - 1), 2); }},
      {1, 1, [](std::int64_t i) { return q(-(8 * i - 5)); },
       [](std::int64_t l, std::int64_t i) { return q((2 * l - 1) * (4 * l + 1) - (2 * i - 1) * (4 * i - 3), 2); }},
      {1, 1, [](std::int64_t i) { return q(8 * i - 5); },
       [](std::int64_t l, std::int64_t i) { return q((2 * l + 1) * (4 * l - 1) - (2 * i - 1) * (4 * i - 3), 2); }},
  };
  TermList t;
  enumerate_rows(rows, n, t, "C[q]");
  return Series::from_terms(t, n);
}

Series legendre_rhs(const Rational& n) {
  TermList t;
  enumerate_monotone(
      n, [](std::int64_t j, std::int64_t k) { return q((2 * j + 1) * (2 * k + 1) - 1, 2); },
      [](std::int64_t, std::int64_t k) { return q(2 * k + 1); }, t, "Legendre sum");
  return Series::from_terms(t, n);
}

namespace {

struct DecompositionTerm {
  AffineFamily family;
  std::int64_t affine_l;
};

DecompositionTerm decomposition_term(std::int64_t l) {
  if (l % 2 == 0) return {AffineFamily::A, l / 2};
  return {AffineFamily::B, (l + 1) / 2};
}

Rational vir_order(std::int64_t p, std::int64_t i) {
  return -central_charge(1, p) / Rational(24) + min(conformal_weight(1, p, 1, i), conformal_weight(1, p, 1, -i));
}

}  // namespace

Rational decomposition_summand_order(std::int64_t p, std::int64_t l) {
  auto term = decomposition_term(l);
  return affine_neg_char_order(p, term.family, term.affine_l) + vir_order(p, l + 1);
}

DecompositionSum decomposition_sum(std::int64_t p, const Rational& n) {
  check_affine_p(p);
  DecompositionSum out{Series(n), 0};
  Rational prev;
  for (std::int64_t l = 0;; ++l) {
    Rational start = decomposition_summand_order(p, l);
    if (l > 0 && !(prev < start)) throw EnumerationInvariant("decomposition summands do not start higher and higher");
    prev = start;
    if (!(start < n)) break;
    auto term = decomposition_term(l);
    Rational aff_order = affine_neg_char_order(p, term.family, term.affine_l);
    Rational v_order = vir_order(p, l + 1);
    Series aff = affine_neg_char(p, term.family, term.affine_l, n - v_order);
    Series vir = vir_char(p, l + 1, n - aff_order);
    out.value = add(out.value, mul(aff, vir).truncated(n));
    out.terms_used = l + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Eight-class table.

namespace {

struct ClassRow {
  std::function<Rational(std::int64_t, std::int64_t)> condition;  // value that must be an integer
  bool nonnegative;                                                // >= 0 vs < 0
  std::function<Rational(std::int64_t, std::int64_t)> l;
  std::function<Rational(std::int64_t, std::int64_t)> i;
  std::function<Rational(const Rational&, const Rational&)> k_of;  // table relation for k
  std::function<Rational(const Rational&, const Rational&)> j_of;  // table relation for j
  std::function<Rational(const Rational&)> weight;                 // signed row coefficient
  std::function<Rational(const Rational&, const Rational&)> exponent;  // matching B[q] exponent
  std::int64_t i_min;
};

const std::vector<ClassRow>& class_rows() {
  static const std::vector<ClassRow> rows = [] {
    auto J = [](std::int64_t j) { return Rational(j); };
    auto K = [](std::int64_t k) { return Rational(k); };
    const Rational h(1, 2), s6(1, 6), t3(1, 3), f6(5, 6);
    const Rational one(1), three(3), two(2);
    std::vector<ClassRow> r;
    auto e_a = [](const Rational& l, const Rational& i) { return l * (Rational(3) * l + Rational(2)) - i * (Rational(3) * i + Rational(1)); };
    auto e_b = [](const Rational& l, const Rational& i) { return (l + Rational(1)) * (Rational(3) * l + Rational(1)) - i * (Rational(3) * i + Rational(1)); };
    auto e_c = [](const Rational& l, const Rational& i) { return l * (Rational(3) * l + Rational(2)) - i * (Rational(3) * i - Rational(1)); };
    auto e_d = [](const Rational& l, const Rational& i) { return (l + Rational(1)) * (Rational(3) * l + Rational(1)) - i * (Rational(3) * i - Rational(1)); };
    auto e_e = [](const Rational& l, const Rational& i) { return ((Rational(2) * l - Rational(1)) * (Rational(6) * l + Rational(1)) - (Rational(2) * i - Rational(1)) * (Rational(6) * i - Rational(1))) / Rational(4); };
    auto e_f = [](const Rational& l, const Rational& i) { return ((Rational(2) * l + Rational(1)) * (Rational(6) * l - Rational(1)) - (Rational(2) * i - Rational(1)) * (Rational(6) * i - Rational(1))) / Rational(4); };
    auto e_g = [](const Rational& l, const Rational& i) { return ((Rational(2) * l - Rational(1)) * (Rational(6) * l + Rational(1)) - (Rational(2) * i - Rational(1)) * (Rational(6) * i - Rational(5))) / Rational(4); };
    auto e_h = [](const Rational& l, const Rational& i) { return ((Rational(2) * l + Rational(1)) * (Rational(6) * l - Rational(1)) - (Rational(2) * i - Rational(1)) * (Rational(6) * i - Rational(5))) / Rational(4); };
    auto c12 = [=](std::int64_t j, std::int64_t k) { return J(j) * h - K(k) * s6; };
    auto c34 = [=](std::int64_t j, std::int64_t k) { return K(k) * s6 - J(j) * h + h; };
    auto c56 = [=](std::int64_t j, std::int64_t k) { return K(k) * s6 - J(j) * h - t3; };
    auto c78 = [=](std::int64_t j, std::int64_t k) { return J(j) * h - K(k) * s6 + f6; };
    // (1)
    r.push_back({c12, true, [=](auto j, auto k) { return K(k) * s6 + J(j) * h; },
                 [=](auto j, auto k) { return J(j) * h - K(k) * s6; },
                 [=](auto& l, auto& i) { return three * (l - i); }, [=](auto& l, auto& i) { return l + i; },
                 [=](auto& i) { return Rational(6) * i + one; }, e_a, 0});
    // (2)
    r.push_back({c12, false, [=](auto j, auto k) { return K(k) * s6 + J(j) * h; },
                 [=](auto j, auto k) { return K(k) * s6 - J(j) * h; },
                 [=](auto& l, auto& i) { return three * (l + i); }, [=](auto& l, auto& i) { return l - i; },
                 [=](auto& i) { return -(Rational(6) * i - one); }, e_c, 1});
    // (3)
    r.push_back({c34, true, [=](auto j, auto k) { return K(k) * s6 + (J(j) + one) * h; },
                 [=](auto j, auto k) { return K(k) * s6 - (J(j) - one) * h; },
                 [=](auto& l, auto& i) { return three * (l + i - one); }, [=](auto& l, auto& i) { return l - i; },
                 [=](auto& i) { return -(Rational(6) * i - Rational(4)); }, e_g, 1});
    // (4)
    r.push_back({c34, false, [=](auto j, auto k) { return K(k) * s6 + (J(j) + one) * h; },
                 [=](auto j, auto k) { return (J(j) + one) * h - K(k) * s6; },
                 [=](auto& l, auto& i) { return three * (l - i); }, [=](auto& l, auto& i) { return l + i - one; },
                 [=](auto& i) { return Rational(6) * i - two; }, e_e, 1});
    // (5)
    r.push_back({c56, true, [=](auto j, auto k) { return (K(k) + one) * s6 + (J(j) - one) * h; },
                 [=](auto j, auto k) { return (K(k) + one) * s6 - (J(j) + one) * h; },
                 [=](auto& l, auto& i) { return three * (l + i) + two; }, [=](auto& l, auto& i) { return l - i; },
                 [=](auto& i) { return -(Rational(6) * i + one); }, e_b, 0});
    // (6)
    r.push_back({c56, false, [=](auto j, auto k) { return (K(k) + one) * s6 + (J(j) - one) * h; },
                 [=](auto j, auto k) { return -(K(k) + one) * s6 + (J(j) + one) * h; },
                 [=](auto& l, auto& i) { return three * (l - i) + two; }, [=](auto& l, auto& i) { return l + i; },
                 [=](auto& i) { return Rational(6) * i - one; }, e_d, 1});
    // (7)
    r.push_back({c78, true, [=](auto j, auto k) { return (K(k) + one) * s6 + J(j) * h; },
                 [=](auto j, auto k) { return J(j) * h - (K(k) + one) * s6 + one; },
                 [=](auto& l, auto& i) { return three * (l - i) + two; }, [=](auto& l, auto& i) { return l + i - one; },
                 [=](auto& i) { return Rational(6) * i - Rational(4); }, e_h, 1});
    // (8)
    r.push_back({c78, false, [=](auto j, auto k) { return (K(k) + one) * s6 + J(j) * h; },
                 [=](auto j, auto k) { return (K(k) + one) * s6 - J(j) * h; },
                 [=](auto& l, auto& i) { return three * (l + i) - one; }, [=](auto& l, auto& i) { return l - i; },
                 [=](auto& i) { return -(Rational(6) * i - two); }, e_f, 1});
    return r;
  }();
  return rows;
}

bool row_holds(const ClassRow& row, std::int64_t j, std::int64_t k) {
  Rational v = row.condition(j, k);
  if (!v.is_integer()) return false;
  return row.nonnegative ? v.sign() >= 0 : v.sign() < 0;
}

}  // namespace

int partition_class(std::int64_t j, std::int64_t k) {
  const auto& rows = class_rows();
  int found = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (row_holds(rows[r], j, k)) {
      if (found != 0) return 0;
      found = static_cast<int>(r) + 1;
    }
  }
  return found;
}

PartitionReport partition_check(std::int64_t max_j, std::int64_t max_k) {
  if (max_j < 0 || max_k < 0) throw std::invalid_argument("partition_check needs J, K >= 0");
  const auto& rows = class_rows();
  PartitionReport report;
  for (std::int64_t j = 0; j <= max_j; ++j) {
    for (std::int64_t k = 0; k <= max_k; ++k) {
      if (k % 3 == 1) {
        ++report.excluded;
        continue;
      }
      ++report.pairs_checked;
      PartitionClassHit hit{j, k, {}};
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (row_holds(rows[r], j, k)) hit.classes.push_back(static_cast<int>(r) + 1);
      }
      if (hit.classes.size() != 1) {
        report.violations.push_back(std::move(hit));
        continue;
      }
      const int cls = hit.classes.front();
      const ClassRow& row = rows[static_cast<std::size_t>(cls - 1)];
      ++report.class_counts[static_cast<std::size_t>(cls - 1)];
      Rational l = row.l(j, k);
      Rational i = row.i(j, k);
      PartitionReconstructionIssue issue{j, k, cls, l, i, {}};
      if (!l.is_integer() || !i.is_integer()) {
        issue.what = "l or i not integral";
        report.reconstruction.push_back(issue);
        continue;
      }
      if (row.k_of(l, i) != Rational(k) || row.j_of(l, i) != Rational(j)) {
        issue.what = "table relation for (j, k) fails";
        report.reconstruction.push_back(issue);
      }
      Rational w = Rational(3 * j - k + 1);
      if (row.weight(i) != w) {
        issue.what = "signed weight " + row.weight(i).to_string() + " != 3j-k+1 = " + w.to_string();
        report.weight.push_back(issue);
      }
      Rational legendre_exp((2 * j + 1) * (2 * k + 1) - 1, 4);
      if (row.exponent(l, i) != legendre_exp) {
        issue.what = "B[q] exponent " + row.exponent(l, i).to_string() + " != " + legendre_exp.to_string();
        report.exponent.push_back(issue);
      }
      if (i < Rational(row.i_min) || l < i) {
        issue.what = "i outside the summation range of the matching B[q] row";
        report.index_range.push_back(issue);
      }
    }
  }
  return report;
}

}  // namespace qmod
