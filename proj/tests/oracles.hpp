#pragma once

// Brute-force references used by the tests. Nothing here calls into the
// library: series are plain dense vectors c[k] = coefficient of q^(k/D).

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>
#include <gmpxx.h>

#include "qmod/qseries.hpp"

namespace oracle {

using Dense = std::vector<mpq_class>;

inline Dense multiply(const Dense& a, const Dense& b, std::size_t len) {
  Dense out(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline mpz_class binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// prod_{m>=1} (1 - q^(step m))^e in units of q, by multiplying binomial
/// expansions factor by factor.
inline Dense naive_product(std::int64_t step, std::int64_t e, std::size_t len) {
  Dense out(len, 0);
  out[0] = 1;
  for (std::int64_t m = 1; static_cast<std::size_t>(step * m) < len; ++m) {
    std::int64_t a = step * m;
    Dense f(len, 0);
    for (std::int64_t j = 0; static_cast<std::size_t>(a * j) < len; ++j) {
      // (1 - x)^e = sum_j (-1)^j C(e, j) x^j for e >= 0; C(-e + j - 1, j) x^j for e < 0.
      mpz_class c = e >= 0 ? binomial(e, j) * ((j % 2) ? -1 : 1) : binomial(-e + j - 1, j);
      f[static_cast<std::size_t>(a * j)] = c;
    }
    out = multiply(out, f, len);
  }
  return out;
}

/// Euler's pentagonal number theorem: (q;q) = sum_k (-1)^k q^(k(3k-1)/2).
inline Dense pentagonal(std::size_t len) {
  Dense out(len, 0);
  for (std::int64_t k = -static_cast<std::int64_t>(len); k <= static_cast<std::int64_t>(len); ++k) {
    std::int64_t e = k * (3 * k - 1) / 2;
    if (e >= 0 && static_cast<std::size_t>(e) < len) out[static_cast<std::size_t>(e)] += (k % 2) ? -1 : 1;
  }
  return out;
}

/// Partition numbers p(0..len-1) by dynamic programming over part sizes.
inline std::vector<mpz_class> partitions(std::size_t len) {
  std::vector<mpz_class> p(len, 0);
  p[0] = 1;
  for (std::size_t part = 1; part < len; ++part) {
    for (std::size_t n = part; n < len; ++n) p[n] += p[n - part];
  }
  return p;
}

inline mpz_class sigma(int k, std::int64_t n) {
  mpz_class s = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) {
      mpz_class t;
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
      s += t;
    }
  }
  return s;
}

/// Number of (a,b,c,d) in Z^4 with a^2+b^2+c^2+d^2 = m.
inline std::int64_t four_squares(std::int64_t m) {
  std::int64_t count = 0;
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= m) ++r;
  for (std::int64_t a = -r; a <= r; ++a)
    for (std::int64_t b = -r; b <= r; ++b)
      for (std::int64_t c = -r; c <= r; ++c) {
        std::int64_t rest = m - a * a - b * b - c * c;
        if (rest < 0) continue;
        std::int64_t d = 0;
        while (d * d < rest) ++d;
        if (d * d == rest) count += d == 0 ? 1 : 2;
      }
  return count;
}

/// Number of (a,b,c,d) >= 0 with T(a)+T(b)+T(c)+T(d) = m, T(x) = x(x+1)/2.
inline std::int64_t four_triangular(std::int64_t m) {
  std::vector<std::int64_t> t;
  for (std::int64_t x = 0; x * (x + 1) / 2 <= m; ++x) t.push_back(x * (x + 1) / 2);
  std::int64_t count = 0;
  for (auto a : t)
    for (auto b : t)
      for (auto c : t) {
        std::int64_t rest = m - a - b - c;
        if (rest < 0) continue;
        for (auto d : t) count += d == rest;
      }
  return count;
}

/// Checks that f has coefficient dense[k] at exponent shift + k/D for every k
/// with that exponent below f's accuracy, and nothing in between.
inline void expect_dense(const qmod::Series& f, const Dense& dense, std::int64_t D, const qmod::Rational& shift) {
  for (const auto& [e, c] : f.term_list()) {
    qmod::Rational k = (e - shift) * qmod::Rational(D);
    ASSERT_TRUE(k.is_integer()) << "unexpected exponent " << e;
    ASSERT_GE(k.sign(), 0) << "term below the expected start: " << e;
  }
  for (std::size_t k = 0; k < dense.size(); ++k) {
    qmod::Rational e = shift + qmod::Rational(static_cast<std::int64_t>(k), D);
    if (!(e < f.accuracy())) break;
    EXPECT_EQ(f.coefficient(e), qmod::Rational(dense[k])) << "at exponent " << e;
  }
}

}  // namespace oracle
