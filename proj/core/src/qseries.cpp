#include "qmod/qseries.hpp"

namespace qmod {

Series product_expand(const Rational& a, const Rational& b, std::int64_t e, const Rational& n_acc) {
  if (a.sign() <= 0 || b.sign() <= 0) {
    throw NonpositiveExponentStep("product exponents need a > 0 and b > 0, got a=" + a.to_string() +
                                  ", b=" + b.to_string());
  }
  const std::int64_t L = lcm64(detail::exponent_denominator(a), detail::exponent_denominator(b));
  const std::int64_t slots = std::max<std::int64_t>(0, detail::numerator_limit(n_acc, L));
  std::vector<mpz_class> g(static_cast<std::size_t>(slots));
  if (slots > 0) g[0] = 1;
  const std::int64_t step = detail::numerator_over(b, L);
  const std::int64_t reps = e < 0 ? -e : e;
  for (std::int64_t c = detail::numerator_over(a, L); c < slots; c += step) {
    for (std::int64_t r = 0; r < reps; ++r) {
      if (e > 0) {
        // multiply by (1 - q^c): descending so each slot reads the old value.
        for (std::int64_t m = slots - 1; m >= c; --m) g[m] -= g[m - c];
      } else {
        // divide by (1 - q^c): ascending recurrence.
        for (std::int64_t m = c; m < slots; ++m) g[m] += g[m - c];
      }
    }
  }
  Series::TermMap out;
  for (std::int64_t m = 0; m < slots; ++m) {
    if (g[m] != 0) out.emplace_hint(out.end(), m, Rational(g[m]));
  }
  return Series(L, std::move(out), n_acc);
}

}  // namespace qmod
