#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmod/polynomial.hpp"

namespace qmod {

/// num(k) / den(k).
struct RationalFunction {
  Polynomial num;
  Polynomial den;

  /// Throws PoleEvaluation when den(k) == 0.
  Rational operator()(const Rational& k) const;
};

/// A W-algebra central charge c_W(k) against a sum of Sugawara-type terms.
struct LevelCase {
  std::string name;
  RationalFunction c_w;
  std::vector<RationalFunction> c_sug;  // summed

  static LevelCase f4();
  static LevelCase e8();
};

/// (c_W(k), c_sug(k)). Throws PoleEvaluation at a pole of either side.
std::pair<Rational, Rational> w_charges(const LevelCase& c, const Rational& k);

struct LevelReport {
  std::vector<RationalRoot> levels;  // distinct rational roots, ascending, with multiplicity
  std::vector<Rational> discarded_poles;
  Polynomial cleared;   // integer polynomial whose zeros contain the levels
  Polynomial residual;  // cleared with every rational root divided out
  int degree() const { return cleared.degree(); }
  bool has_irrational_roots() const { return residual.degree() > 0; }
  std::vector<Rational> values() const;
};

LevelReport conformal_levels(const LevelCase& c);

}  // namespace qmod
