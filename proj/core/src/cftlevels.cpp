#include "qmod/cftlevels.hpp"

#include "qmod/errors.hpp"

namespace qmod {

namespace {

Polynomial lin(std::int64_t a, std::int64_t b) { return Polynomial::linear(Rational(a), Rational(b)); }
Polynomial con(std::int64_t c) { return Polynomial::constant(Rational(c)); }

bool is_pole(const LevelCase& c, const Rational& k) {
  if (c.c_w.den(k).is_zero()) return true;
  for (const auto& f : c.c_sug) {
    if (f.den(k).is_zero()) return true;
  }
  return false;
}

}  // namespace

Rational RationalFunction::operator()(const Rational& k) const {
  Rational d = den(k);
  if (d.is_zero()) throw PoleEvaluation("pole at k = " + k.to_string());
  return num(k) / d;
}

LevelCase LevelCase::f4() {
  return {"F4",
          {con(-6) * lin(1, 3) * lin(3, 14), lin(1, 9)},
          {{con(3) * lin(8, 40), lin(8, 42)}, {con(3) * lin(1, 4), lin(1, 6)}}};
}

LevelCase LevelCase::e8() {
  return {"E8",
          {con(-6) * Polynomial({Rational(12490), Rational(1095), Rational(24)}), lin(1, 30)},
          {{con(3) * lin(15, 350), lin(15, 352)}, {con(3) * lin(1, 22), lin(1, 24)}}};
}

std::pair<Rational, Rational> w_charges(const LevelCase& c, const Rational& k) {
  Rational sug;
  for (const auto& f : c.c_sug) sug += f(k);
  return {c.c_w(k), sug};
}

std::vector<Rational> LevelReport::values() const {
  std::vector<Rational> out;
  for (const auto& r : levels) out.push_back(r.value);
  return out;
}

LevelReport conformal_levels(const LevelCase& c) {
  // c_W - sum c_sug as a single fraction num/den, den = product of all denominators.
  Polynomial num = c.c_w.num;
  Polynomial den = c.c_w.den;
  for (const auto& f : c.c_sug) {
    num = num * f.den - f.num * den;
    den = den * f.den;
  }
  LevelReport report;
  report.cleared = num.primitive();
  RootReport roots = rational_roots(report.cleared);
  for (auto& r : roots.roots) {
    if (is_pole(c, r.value)) {
      report.discarded_poles.push_back(r.value);
    } else {
      report.levels.push_back(std::move(r));
    }
  }
  report.residual = roots.residual;
  return report;
}

}  // namespace qmod
