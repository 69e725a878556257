#include <gtest/gtest.h>

#include <random>

#include "qmod/appell.hpp"
#include "qmod/bijet.hpp"
#include "qmod/linsolve.hpp"
#include "qmod/mlde.hpp"
#include "qmod/qseries.hpp"

using qmod::BiJet;
using qmod::Rational;
using qmod::Series;

namespace {

constexpr int kInstances = 120;

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }

  Rational rational(std::int64_t bound = 9) {
    return Rational(integer(-bound, bound), integer(1, 6));
  }

  Rational nonzero_rational() {
    Rational r;
    while (r.is_zero()) r = rational();
    return r;
  }

  // Random series with exponents in (lo, acc), over a random small denominator.
  Series series(std::int64_t lo, const Rational& acc, bool nonzero_lead = false) {
    static const std::int64_t kDens[] = {1, 2, 3, 4, 6};
    std::int64_t L = kDens[integer(0, 4)];
    std::vector<std::pair<Rational, Rational>> terms;
    for (std::int64_t m = lo * L; Rational(m, L) < acc; ++m) {
      if (nonzero_lead && terms.empty()) {
        terms.emplace_back(Rational(m, L), nonzero_rational());
      } else if (integer(0, 2) == 0) {
        terms.emplace_back(Rational(m, L), rational());
      }
    }
    return Series::from_terms(terms, acc);
  }

  BiJet jet() { return BiJet(rational(), rational(), rational(), rational()); }

 private:
  std::mt19937 rng_;
};

void expect_agree(const Series& a, const Series& b, const std::string& what) {
  Rational n = min(a.accuracy(), b.accuracy());
  auto c = compare(a, b, n);
  EXPECT_TRUE(c.equal()) << what << ": first difference at q^" << c.mismatch->exponent;
}

}  // namespace

TEST(Properties, RingAxioms) {
  Gen g(11);
  for (int t = 0; t < kInstances; ++t) {
    Series f = g.series(g.integer(-2, 1), Rational(g.integer(2, 7)));
    Series h = g.series(g.integer(-2, 1), Rational(g.integer(2, 7)));
    Series k = g.series(g.integer(-2, 1), Rational(g.integer(2, 7)));
    EXPECT_EQ(f + h, h + f);
    EXPECT_EQ(f * h, h * f);
    expect_agree((f + h) + k, f + (h + k), "additive associativity");
    expect_agree((f * h) * k, f * (h * k), "multiplicative associativity");
    expect_agree(f * (h + k), f * h + f * k, "distributivity");
    expect_agree(f - f, Series(f.accuracy()), "additive inverse");
  }
}

TEST(Properties, AccuracyIsSound) {
  // Truncating the inputs never changes a coefficient the result claims to know.
  Gen g(23);
  for (int t = 0; t < kInstances; ++t) {
    Rational big(g.integer(12, 16));
    Series F = g.series(g.integer(-1, 1), big + Rational(10), true);
    Series G = g.series(g.integer(-1, 1), big + Rational(10), true);
    Series f = F.truncated(Rational(g.integer(2, 6)) + Rational(1, 3));
    Series h = G.truncated(Rational(g.integer(1, 6)));
    Series sum = f + h;
    Series prod = f * h;
    Series inv = invert(f);
    expect_agree(sum, F + G, "add");
    expect_agree(prod, F * G, "mul");
    expect_agree(inv, invert(F), "invert");
    EXPECT_EQ(prod.accuracy(), min(f.accuracy() + h.order(), h.accuracy() + f.order()));
    EXPECT_EQ(inv.accuracy(), f.accuracy() - f.order() - f.order());
  }
}

TEST(Properties, InverseRoundTrip) {
  Gen g(37);
  for (int t = 0; t < kInstances; ++t) {
    Series f = g.series(g.integer(-2, 2), Rational(g.integer(3, 9)), true);
    Series one = f * invert(f);
    ASSERT_FALSE(one.accuracy() < Rational(0));
    expect_agree(one, Series::constant(Rational(1), one.accuracy()), "f * f^-1");
  }
}

TEST(Properties, SerreDerivativeIsLeibniz) {
  Gen g(41);
  const Rational n(8);
  for (int t = 0; t < kInstances; ++t) {
    Series f = g.series(0, Rational(10));
    Series h = g.series(0, Rational(10));
    Rational a(2 * g.integer(0, 2));
    Rational b(2 * g.integer(0, 2));
    Series lhs = qmod::serre_derivative(f * h, a + b, n);
    Series rhs = (qmod::serre_derivative(f, a, n) * h + f * qmod::serre_derivative(h, b, n)).truncated(n);
    ASSERT_FALSE(rhs.accuracy() < n);
    EXPECT_TRUE(compare(lhs, rhs, n).equal()) << "a = " << a << ", b = " << b;
  }
}

TEST(Properties, BiJetExponentLaws) {
  Gen g(53);
  for (int t = 0; t < kInstances; ++t) {
    Rational a = g.rational(), b = g.rational(), c = g.rational(), d = g.rational();
    EXPECT_EQ(qmod::xy_power(a, b) * qmod::xy_power(c, d), qmod::xy_power(a + c, b + d));
    BiJet u(Rational(1), g.rational(), g.rational(), g.rational());
    EXPECT_EQ(qmod::bijet_pow(u, a) * qmod::bijet_pow(u, c), qmod::bijet_pow(u, a + c));
    BiJet j = g.jet();
    if (j.is_invertible()) EXPECT_EQ(j * j.inverse(), BiJet::one());
    BiJet k = g.jet(), m = g.jet();
    EXPECT_EQ(j * (k + m), j * k + j * m);
    EXPECT_EQ((j * k) * m, j * (k * m));
  }
}

TEST(Properties, RationalTextRoundTrip) {
  Gen g(59);
  for (int t = 0; t < kInstances; ++t) {
    Rational r(g.integer(-1000000, 1000000), g.integer(1, 100000));
    EXPECT_EQ(Rational::parse(r.to_string()), r);
  }
}

TEST(Properties, LinearSystems) {
  Gen g(61);
  for (int t = 0; t < kInstances; ++t) {
    std::size_t cols = static_cast<std::size_t>(g.integer(1, 5));
    std::size_t rows = cols + static_cast<std::size_t>(g.integer(0, 3));
    qmod::Matrix a(rows, std::vector<Rational>(cols));
    for (auto& row : a)
      for (auto& v : row) v = g.rational(5);
    std::vector<Rational> x(cols);
    for (auto& v : x) v = g.rational();
    std::vector<Rational> b(rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) b[i] += a[i][j] * x[j];
    qmod::LinearSolution s = qmod::solve_exact(a, b);
    std::size_t rank = qmod::rank_of(a);
    EXPECT_EQ(s.rank, rank);
    if (rank == cols) {
      ASSERT_EQ(s.kind, qmod::LinearSolution::Kind::Unique);
      EXPECT_EQ(s.x, x);
    } else {
      EXPECT_EQ(s.kind, qmod::LinearSolution::Kind::Ambiguous);
      EXPECT_EQ(s.nullity, cols - rank);
    }
    // A duplicated row with a shifted right-hand side makes the system inconsistent.
    a.push_back(a.front());
    b.push_back(b.front() + Rational(1));
    EXPECT_EQ(qmod::solve_exact(a, b).kind, qmod::LinearSolution::Kind::Inconsistent);
  }
}
