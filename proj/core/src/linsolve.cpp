#include "qmod/linsolve.hpp"

#include <stdexcept>

namespace qmod {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix to_integer_rows(const Matrix& a, const std::vector<Rational>* b) {
  IntMatrix out;
  out.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    mpz_class l = 1;
    for (const auto& x : a[r]) l = lcm(l, x.denominator());
    if (b) l = lcm(l, (*b)[r].denominator());
    std::vector<mpz_class> row;
    row.reserve(a[r].size() + 1);
    for (const auto& x : a[r]) row.push_back(x.numerator() * (l / x.denominator()));
    if (b) row.push_back((*b)[r].numerator() * (l / (*b)[r].denominator()));
    out.push_back(std::move(row));
  }
  return out;
}

// In-place fraction-free reduction to row echelon form. Returns pivot columns.
std::vector<std::size_t> bareiss(IntMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const std::size_t width = m[r].size();
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < width; ++j) {
        mpz_class v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        if (v % prev != 0) throw std::logic_error("fraction-free elimination lost exactness");
        m[i][j] = v / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_of(const Matrix& a) {
  if (a.empty()) return 0;
  IntMatrix m = to_integer_rows(a, nullptr);
  return bareiss(m, a.front().size()).size();
}

LinearSolution solve_exact(const Matrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("row count of A and b differ");
  LinearSolution out;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  }
  IntMatrix m = to_integer_rows(a, &b);
  std::vector<std::size_t> pivots = bareiss(m, cols + 1);
  // A pivot in the augmented column means the system is inconsistent.
  if (!pivots.empty() && pivots.back() == cols) {
    out.rank = pivots.size() - 1;
    out.kind = LinearSolution::Kind::Inconsistent;
    return out;
  }
  out.rank = pivots.size();
  if (out.rank < cols) {
    out.kind = LinearSolution::Kind::Ambiguous;
    out.nullity = cols - out.rank;
    return out;
  }
  out.kind = LinearSolution::Kind::Unique;
  out.x.assign(cols, Rational());
  for (std::size_t r = out.rank; r-- > 0;) {
    Rational s(m[r][cols]);
    for (std::size_t j = r + 1; j < cols; ++j) s -= Rational(m[r][j]) * out.x[j];
    out.x[r] = s / Rational(m[r][r]);
  }
  return out;
}

}  // namespace qmod
