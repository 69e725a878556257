#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qmod/bijet.hpp"
#include "qmod/qseries.hpp"

namespace qmod {

using JetSeries = QSeries<BiJet>;

/// The substitution x^ex y^ey.
struct MonomialArg {
  Rational ex;
  Rational ey;
};

/// x^a y^b at x = 1 + e1, y = 1 + e2.
BiJet xy_power(const Rational& a, const Rational& b);

/// theta_{n,a}(X) = sum_k (-1)^k q^((2nk+a)^2/(8n)) X^(k + a/(2n)) with X = x^ex y^ey,
/// exact below N.
JetSeries vartheta(std::int64_t n, std::int64_t a, const MonomialArg& arg, const Rational& N);

/// A q-monomial q^q x^ex y^ey.
struct QMonomial {
  Rational q;
  Rational ex;
  Rational ey;
};

/// kappa_2(X, Y, q^qexp) = sum_m q^(qexp m^2) X^(2m) / (1 - X Y q^(qexp m)), each
/// geometric factor expanded in the direction where its q-exponent is positive.
/// Throws PoleEvaluation if some X Y q^(qexp m) has q-exponent zero.
JetSeries kappa2(const QMonomial& x, const QMonomial& y, const Rational& qexp, const Rational& N);

/// B_n = kappa_2(q^(n/2) x, q^(-1/2) y^n, q^n) as the two-quadrant double series;
/// with mirror, kappa_2(q^(-n/2) x^-1, q^(-1/2) y^n, q^n) via kappa2().
JetSeries appell_Bn(std::int64_t n, const Rational& N, bool mirror = false);

/// Mixed-derivative part d^2/dxdy (x y F)|_{x=y=1}.
Series mixed_xy_part(const JetSeries& f);

enum class AnMethod { Thm81, Indef1, Indef2, Closed, Appell };

std::string_view to_string(AnMethod m);
/// Throws std::invalid_argument for an unknown name.
AnMethod parse_an_method(std::string_view name);

/// A_n(tau) = eta(tau)^6 ch[C_n], exact below N, by the chosen construction.
Series an_series(std::int64_t n, AnMethod method, const Rational& N);

}  // namespace qmod
