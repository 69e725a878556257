#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmod/linsolve.hpp"
#include "qmod/modforms.hpp"

namespace qmod {

enum class Group { Gamma1, Gamma2 };

std::string to_string(Group g);

/// Product of generators; the empty monomial is 1.
using Monomial = std::vector<FormsGenerator>;

/// Finite rational combination of generator monomials of one weight.
struct ModFormExpr {
  Group group = Group::Gamma1;
  int weight = 0;
  std::vector<std::pair<Rational, Monomial>> terms;

  /// Throws std::invalid_argument if a monomial's weight differs from `weight`.
  void validate() const;
  /// Expansion exact below n (all generators used here start at q^0 or later).
  Series expand(const Rational& n) const;
  bool is_zero() const { return terms.empty(); }
  std::string to_string() const;
};

/// D^(k) + sum_r f_r D^(k-r), with f_r of weight 2r.
struct MLDEOperator {
  int order = 0;
  Group group = Group::Gamma1;
  std::vector<ModFormExpr> coefficients;  // f_1 .. f_order

  std::string to_string() const;
};

/// (q d/dq + k E_2) f, exact below n.
Series serre_derivative(const Series& f, const Rational& k, const Rational& n);

/// d_(2k-2) o ... o d_(0) applied to f; k == 0 is the identity.
Series dq_iter(const Series& f, int k, const Rational& n);

/// The residual of op applied to f, exact below n.
Series mlde_apply(const MLDEOperator& op, const Series& f, const Rational& n);

/// The operators annihilating ch[C_n] for n in {2, 3, 4, 5}. Throws UnsupportedN.
MLDEOperator builtin_mlde(int n);

/// Spanning set of weight-w forms: E4^a E6^b for Gamma1, Theta_{i,w/2-i} (i
/// descending) for Gamma2.
std::vector<Monomial> weight_basis(Group g, int w);

struct MLDESearch {
  LinearSolution::Kind kind = LinearSolution::Kind::Inconsistent;
  std::optional<MLDEOperator> op;  // for Unique
  std::vector<Rational> solution;  // flattened coefficients, f_1 basis first
  std::size_t nullity = 0;
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  Rational truncation;
};

/// Finds f_1..f_k in the spanning sets so that the operator annihilates f
/// below n. Throws InsufficientAccuracy unless there are more equations than
/// unknowns.
MLDESearch find_mlde(const Series& f, int k, Group g, const Rational& n);

struct MLDEVerification {
  int n = 0;
  Rational truncation;
  bool residual_zero = false;
  std::optional<std::pair<Rational, Rational>> first_residual;  // (exponent, coefficient)
  std::optional<MLDESearch> rederived;                          // run when the residual is nonzero
  std::vector<int> differing_coefficients;                      // r with f_r(found) != f_r(builtin)
};

/// Applies builtin_mlde(n) to cp_char(n) below n_bound = 15 + leading exponent
/// by default. On a nonzero residual, re-derives the operator with find_mlde at
/// the same order and lists which f_r disagree with the built-in ones.
MLDEVerification verify_builtin(int n, std::optional<Rational> n_bound = std::nullopt);

/// True when both operators have the same order and their coefficient forms
/// agree as q-series below n.
bool same_operator(const MLDEOperator& a, const MLDEOperator& b, const Rational& n);

}  // namespace qmod
