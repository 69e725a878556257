#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmod/qseries.hpp"

namespace qmod {

/// c_{p',p} = 1 - 6 (p - p')^2 / (p p'). Throws ZeroParameter if p p' == 0.
Rational central_charge(std::int64_t p_prime, std::int64_t p);

/// h^{p',p}_{r,s} = ((s p - r p')^2 - (p - p')^2) / (4 p p').
Rational conformal_weight(std::int64_t p_prime, std::int64_t p, std::int64_t r, std::int64_t s);

/// Central charge of the vertex algebra C_n: 6(1 + n - n^2)/n.
Rational cp_central_charge(std::int64_t n);

// Character formulas. Every function returns a series exact below `n`; the
// prefactor exponent is exact, so results may start at fractional or negative
// powers of q.

/// Virasoro module of central charge c_{1,p} and weight h^{1,p}_{1,i}:
/// q^{-c/24} (q^{h_{1,i}} - q^{h_{1,-i}}) / (q;q)_inf.
Series vir_char(std::int64_t p, std::int64_t i, const Rational& n);

enum class AffineFamily { A, B };

/// Negative-level affine sl2 characters at k = -2 - p for p in {3, 4}.
/// Family A: highest weight (-p-2-2pl)L0 + 2pl L1; family B: (-2-2pl)L0 + (2pl-p)L1.
/// Throws EmptySum for family B with l == 0.
Series affine_neg_char(std::int64_t p, AffineFamily family, std::int64_t l, const Rational& n);

/// Lowest exponent of affine_neg_char, in closed form.
Rational affine_neg_char_order(std::int64_t p, AffineFamily family, std::int64_t l);

/// Admissible sl2 character at level -(2n-1)/n: q^((2n-1)/8) (l+1) q^(n l(l+2)/4) / (q;q)^3.
Series admissible_char(std::int64_t n_param, std::int64_t l, const Rational& n);

/// Rank-m Weyl (beta-gamma) vertex algebra: q^(m/24) prod (1 - q^(k-1/2))^(-2m).
Series weyl_char(std::int64_t m, const Rational& n);

/// L_{-3/2}(sl3): q^(1/3) (q^2;q^2)^8 / (q;q)^8.
Series sl3_char(const Rational& n);

/// The numerator of C_n's character: (q;q)^6 q^{c_n/24} ch[C_n], as four double sums.
/// The second block carries the coefficient (3 + 2(i+k))(2n(i+1) - 1), which is
/// what the equivalent two-quadrant sum gives; see cp_numerator_as_printed.
Series cp_numerator(std::int64_t n_param, const Rational& n);

/// Same sum with (1 + 2in) in the second block, as it is usually quoted. It is
/// not the character (it differs from cp_numerator three units above the bottom);
/// kept so the difference stays testable.
Series cp_numerator_as_printed(std::int64_t n_param, const Rational& n);

/// ch[C_n] = q^{-c_n/24} cp_numerator / (q;q)^6.
Series cp_char(std::int64_t n_param, const Rational& n);

/// The auxiliary double sums B[q] (built from the p = 3 affine numerators) and C[q] (p = 4).
Series bq_series(const Rational& n);
Series cq_series(const Rational& n);

/// sum_{j,k>=0} (2k+1) q^(((2j+1)(2k+1)-1)/2), the four-triangular-numbers series.
Series legendre_rhs(const Rational& n);

/// Sum over l >= 0 of (affine character at weight p*l) x (Virasoro character
/// h^{1,p}_{1,l+1}) for p in {3, 4}. Even l uses family A at l/2, odd l uses
/// family B at (l+1)/2. Summation stops at the first l whose summand starts at
/// or above n.
struct DecompositionSum {
  Series value;
  std::int64_t terms_used = 0;
};
DecompositionSum decomposition_sum(std::int64_t p, const Rational& n);

/// Lowest exponent of the l-th summand of decomposition_sum.
Rational decomposition_summand_order(std::int64_t p, std::int64_t l);

// Eight-class partition table for pairs (j, k), k != 1 mod 3.

struct PartitionClassHit {
  std::int64_t j = 0;
  std::int64_t k = 0;
  std::vector<int> classes;  // 1-based class numbers whose condition holds
};

struct PartitionReconstructionIssue {
  std::int64_t j = 0;
  std::int64_t k = 0;
  int cls = 0;
  Rational l;
  Rational i;
  std::string what;
};

struct PartitionReport {
  std::int64_t pairs_checked = 0;
  std::int64_t excluded = 0;  // pairs with k = 1 mod 3
  std::vector<PartitionClassHit> violations;                  // zero or several classes
  std::vector<PartitionReconstructionIssue> reconstruction;   // l, i not integral or relations broken
  std::vector<PartitionReconstructionIssue> weight;           // signed weight != 3j - k + 1
  std::vector<PartitionReconstructionIssue> exponent;         // B[q] exponent != Legendre exponent
  /// Pairs whose reconstructed i lies outside the summation range of the
  /// matching B[q] row. Informational; does not affect ok().
  std::vector<PartitionReconstructionIssue> index_range;
  std::vector<std::int64_t> class_counts = std::vector<std::int64_t>(8, 0);

  bool ok() const { return violations.empty() && reconstruction.empty() && weight.empty() && exponent.empty(); }
};

PartitionReport partition_check(std::int64_t max_j, std::int64_t max_k);

/// Which single class (1..8) holds for (j, k), or 0 if not exactly one.
int partition_class(std::int64_t j, std::int64_t k);

}  // namespace qmod
