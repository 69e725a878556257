#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "qmod/qseries.hpp"

namespace qmod {

/// Classical generators of the modular-form rings used by the MLDEs.
struct FormsGenerator {
  enum class Tag { Eta, Theta2Pow4, Theta3Pow4, ThetaRS, Eisenstein, TriangularDelta };

  Tag tag = Tag::Eisenstein;
  Rational scale{1};  // Eta(scale)
  int r = 0;          // ThetaRS(r, s)
  int s = 0;
  int k2 = 4;         // Eisenstein(k2), k2 even

  static FormsGenerator eta(Rational s) { return {Tag::Eta, std::move(s), 0, 0, 0}; }
  static FormsGenerator theta2_pow4() { return {Tag::Theta2Pow4, Rational(1), 0, 0, 0}; }
  static FormsGenerator theta3_pow4() { return {Tag::Theta3Pow4, Rational(1), 0, 0, 0}; }
  static FormsGenerator theta_rs(int r, int s) { return {Tag::ThetaRS, Rational(1), r, s, 0}; }
  static FormsGenerator eisenstein(int k2);
  static FormsGenerator triangular_delta() { return {Tag::TriangularDelta, Rational(1), 0, 0, 0}; }

  /// Weight: 1/2 for eta, 2 for each theta fourth power, 2(r+s) for ThetaRS, k2
  /// for Eisenstein. The triangular series has weight 2 only as part of
  /// Delta(q)^4; on its own it reports 1/2.
  Rational weight() const;

  /// Expansion exact below n.
  Series expand(const Rational& n) const;

  std::string to_string() const;

  friend bool operator==(const FormsGenerator&, const FormsGenerator&) = default;
  friend auto operator<=>(const FormsGenerator& a, const FormsGenerator& b) {
    if (auto c = a.tag <=> b.tag; c != 0) return c;
    if (auto c = a.scale <=> b.scale; c != 0) return c;
    if (auto c = a.r <=> b.r; c != 0) return c;
    if (auto c = a.s <=> b.s; c != 0) return c;
    return a.k2 <=> b.k2;
  }
};

/// eta(s tau) = q^(s/24) prod_{n>=1} (1 - q^(s n)).
Series eta(const Rational& s, const Rational& n);

/// theta_3(tau) = sum_{n in Z} q^(n^2/2) and theta_2 over Z + 1/2.
Series theta2(const Rational& n);
Series theta3(const Rational& n);

enum class ThetaKind { Theta2, Theta3 };
Series theta_pow4(ThetaKind kind, const Rational& n);

/// Theta_{r,s} = theta_2^(4r) theta_3^(4s), weight 2(r+s).
Series theta_rs(int r, int s, const Rational& n);

/// Bernoulli number B_m with B_1 = -1/2, from sum_{j<=m} C(m+1, j) B_j = 0.
Rational bernoulli(int m);

/// E_{k2} = -B_{k2}/k2! + 2/(k2-1)! sum_{n>=1} sigma_{k2-1}(n) q^n.
///
/// Constant term is -B_{k2}/k2!, so E_2 here is -1/12 times the classical
/// E_2 and q d/dq + k E_2 is the usual weight-k Serre derivative.
Series eisenstein(int k2, const Rational& n);

/// Delta(q) = sum_{n>=0} q^(n(n+1)/2).
Series triangular_delta(const Rational& n);

/// f^k computed so that the result is exact below n. Requires f's lowest
/// exponent to be known from `base(acc)` for any accuracy.
template <class BaseFn>
Series power_to(BaseFn&& base, const Rational& base_order, std::int64_t k, const Rational& n) {
  if (k == 0) return Series::constant(Rational(1), n);
  Series f = base(n - base_order * Rational(k - 1));
  return power(f, k).truncated(n);
}

}  // namespace qmod
