// One PASS/FAIL line per acceptance criterion, each with its runtime budget.

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "qmod/appell.hpp"
#include "qmod/cftlevels.hpp"
#include "qmod/mlde.hpp"
#include "qmod/modforms.hpp"
#include "qmod/vachar.hpp"

using namespace qmod;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << " [" << what << "]";
    }
  }
};

void check_equal(Verdict& v, const Series& a, const Series& b, const Rational& n, const std::string& what) {
  auto c = compare(a, b, n);
  if (!c.equal()) {
    v.ok = false;
    v.note << " [" << what << ": differ at q^" << c.mismatch->exponent << ", " << c.mismatch->lhs << " vs "
           << c.mismatch->rhs << "]";
  }
}

Series delta_half(const Rational& n) { return scale_exponents(triangular_delta(n * Rational(2)), Rational(1, 2)); }

void c1(Verdict& v) {
  const Rational n(50);
  check_equal(v, weyl_char(2, n), decomposition_sum(3, n).value, n, "ch[M_(2)]");
}

void c2(Verdict& v) {
  const Rational n(50);
  check_equal(v, sl3_char(n), decomposition_sum(4, n).value, n, "ch[L_{-3/2}(sl3)]");
}

void c3(Verdict& v) {
  const Rational n(50);
  check_equal(v, bq_series(n), power(delta_half(n), 4), n, "B[q]");
  check_equal(v, cq_series(n), power(triangular_delta(n), 4), n, "C[q]");
}

void c4(Verdict& v) {
  const Rational n(100);
  check_equal(v, mul(triangular_delta(n), product_expand(Rational(1), Rational(1), 1, n)),
              power(product_expand(Rational(2), Rational(2), 1, n), 2), n, "Gauss");
  check_equal(v, power(triangular_delta(n), 4), legendre_rhs(n), n, "Legendre");
}

void c5(Verdict& v) {
  PartitionReport r = partition_check(50, 50);
  v.require(r.violations.empty(), "pairs without exactly one class");
  v.require(r.reconstruction.empty(), "row relations");
  v.require(r.weight.empty(), "signed weight");
  v.require(r.exponent.empty(), "exponent");
  v.note << " (" << r.pairs_checked << " pairs)";
}

void c6(Verdict& v) {
  for (int n = 2; n <= 5; ++n) {
    MLDEVerification m = verify_builtin(n);
    if (m.residual_zero) {
      v.note << "\n    n=" << n << ": residual vanishes below q^" << m.truncation;
      continue;
    }
    v.note << "\n    n=" << n << ": residual nonzero below q^" << m.truncation << ", first term " << m.first_residual->second
           << "*q^" << m.first_residual->first;
    bool unique = m.rederived && m.rederived->kind == LinearSolution::Kind::Unique;
    v.require(unique, "n=" + std::to_string(n) + " re-derivation not unique");
    if (!unique) continue;
    MLDEOperator builtin = builtin_mlde(n);
    v.note << "; find_mlde at order " << builtin.order << " is Unique";
    for (int r : m.differing_coefficients) {
      std::size_t i = static_cast<std::size_t>(r - 1);
      v.note << "\n      f" << r << " printed: " << builtin.coefficients[i].to_string()
             << "\n      f" << r << " derived: " << m.rederived->op->coefficients[i].to_string();
    }
  }
}

void c7(Verdict& v) {
  MLDESearch s3 = find_mlde(cp_char(3, Rational(20)), 2, Group::Gamma1, Rational(20));
  v.require(s3.kind == LinearSolution::Kind::Unique, "n=3 not unique");
  if (s3.kind == LinearSolution::Kind::Unique) {
    v.require(s3.solution == std::vector<Rational>{Rational(-75)}, "n=3 coefficient");
    v.note << " n=3: " << s3.op->to_string() << ";";
  }
  MLDESearch s2 = find_mlde(cp_char(2, Rational(20)), 1, Group::Gamma2, Rational(20));
  v.require(s2.kind == LinearSolution::Kind::Unique, "n=2 not unique");
  if (s2.kind == LinearSolution::Kind::Unique) {
    v.require(s2.solution == std::vector<Rational>{Rational(-1, 8), Rational(-1, 8)}, "n=2 coefficients");
    v.note << " n=2: " << s2.op->to_string();
  }
}

void c8(Verdict& v) {
  const Rational n(15);
  Series q = mul(power(eta(Rational(1), n), 12), power(eta(Rational(1, 2), n + Rational(1)), -6));
  check_equal(v, an_series(2, AnMethod::Thm81, n), q, n, "A_2");
}

void c9(Verdict& v) {
  const AnMethod methods[] = {AnMethod::Thm81, AnMethod::Indef1, AnMethod::Indef2, AnMethod::Closed, AnMethod::Appell};
  for (std::int64_t n = 2; n <= 6; ++n) {
    Rational order = Rational(12) + Rational(n, 4);
    std::vector<Series> s;
    for (AnMethod m : methods) s.push_back(an_series(n, m, order));
    for (std::size_t i = 1; i < s.size(); ++i) {
      check_equal(v, s[0], s[i], order,
                  "n=" + std::to_string(n) + " thm81 vs " + std::string(to_string(methods[i])));
    }
  }
}

void c10(Verdict& v) {
  auto check = [&v](const LevelCase& c, std::vector<Rational> expected) {
    LevelReport r = conformal_levels(c);
    std::sort(expected.begin(), expected.end());
    v.require(r.values() == expected, c.name + " levels");
    v.require(!r.has_irrational_roots(), c.name + " residual factor");
    v.note << " " << c.name << ":";
    for (const auto& x : r.values()) v.note << " " << x;
  };
  check(LevelCase::f4(), {Rational(-23, 4), Rational(-4), Rational(-5), Rational(-9, 2)});
  check(LevelCase::e8(), {Rational(-119, 5), Rational(-70, 3), Rational(-23)});
}

void c11(Verdict& v) {
  const Rational n(20);
  for (std::int64_t p = 2; p <= 6; ++p) {
    Rational shift = cp_central_charge(p) / Rational(24);
    Series s = cp_char(p, n - shift).shifted(shift);
    std::string tag = "n=" + std::to_string(p);
    v.require(!(s.accuracy() < n), tag + " accuracy");
    v.require(s.order() == Rational(0) && s.coefficient(Rational(0)) == Rational(1), tag + " leading term");
    for (const auto& [e, c] : s.terms()) {
      v.require(c.sign() >= 0 && c.is_integer(), tag + " coefficient sign/integrality");
    }
    if (p == 3) {
      v.require(s.coefficient(Rational(1)) == Rational(14), "n=3 depth-1 coefficient");
      v.note << " n=3 depth 1: " << s.coefficient(Rational(1));
    }
  }
}

void c12(Verdict& v) {
  ::testing::GTEST_FLAG(filter) = "Properties.*";
  auto& listeners = ::testing::UnitTest::GetInstance()->listeners();
  delete listeners.Release(listeners.default_result_printer());
  int rc = RUN_ALL_TESTS();
  const auto* u = ::testing::UnitTest::GetInstance();
  v.require(rc == 0, std::to_string(u->failed_test_count()) + " property suites failed");
  v.note << " " << u->successful_test_count() << " suites";
}

struct Criterion {
  const char* name;
  double budget_s;
  std::function<void(Verdict&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  const Criterion criteria[] = {
      {"ch[M_(2)] decomposition up to q^50", 5, c1},
      {"ch[L_{-3/2}(sl3)] decomposition up to q^50", 5, c2},
      {"B[q] = Delta(q^(1/2))^4, C[q] = Delta(q)^4 up to q^50", 3, c3},
      {"Gauss and Legendre identities up to q^100", 2, c4},
      {"eight-class partition, 0 <= j,k <= 50", 1, c5},
      {"MLDE residuals for n = 2..5", 10, c6},
      {"find_mlde rediscovers n = 3 and n = 2 operators", 5, c7},
      {"A_2 eta quotient up to q^15", 2, c8},
      {"five-way A_n agreement, n = 2..6", 20, c9},
      {"conformal levels F4 and E8", 1, c10},
      {"ch[C_n] positivity and integrality, n = 2..6", 3, c11},
      {"property suites", 5, c12},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Verdict v;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.ok = false;
      v.note << " [exception: " << e.what() << "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < c.budget_s;
    bool pass = v.ok && in_time;
    failed += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << " " << index << ". " << c.name << " (" << secs << " s, budget "
              << c.budget_s << " s" << (in_time ? "" : ", OVER BUDGET") << ")" << v.note.str() << "\n"
              << std::flush;
  }
  std::cout << static_cast<int>(std::size(criteria)) - failed << "/" << std::size(criteria) << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
