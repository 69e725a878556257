#pragma once

#include <cstddef>
#include <vector>

#include "qmod/rational.hpp"

namespace qmod {

/// Dense rational matrix, row-major.
using Matrix = std::vector<std::vector<Rational>>;

struct LinearSolution {
  enum class Kind { Unique, Inconsistent, Ambiguous };
  Kind kind = Kind::Inconsistent;
  std::vector<Rational> x;  // filled for Unique
  std::size_t rank = 0;     // rank of the coefficient matrix
  std::size_t nullity = 0;  // solution-space dimension for Ambiguous
};

/// Solves A x = b exactly. Each row is scaled to integers and reduced with
/// fraction-free (Bareiss) elimination; back substitution is done over Q.
LinearSolution solve_exact(const Matrix& a, const std::vector<Rational>& b);

/// Rank of a rational matrix.
std::size_t rank_of(const Matrix& a);

}  // namespace qmod
