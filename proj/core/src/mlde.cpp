#include "qmod/mlde.hpp"

#include <map>

#include "qmod/vachar.hpp"

namespace qmod {

namespace {

FormsGenerator E(int k) { return FormsGenerator::eisenstein(k); }
FormsGenerator T(int r, int s) { return FormsGenerator::theta_rs(r, s); }

ModFormExpr expr(Group g, int weight, std::vector<std::pair<Rational, Monomial>> terms) {
  ModFormExpr e{g, weight, std::move(terms)};
  e.validate();
  return e;
}

void require_accuracy(const Series& f, const Rational& n) {
  if (f.accuracy() < n) {
    throw InsufficientAccuracy("series known below " + f.accuracy().to_string() + ", need " + n.to_string());
  }
}

}  // namespace

std::string to_string(Group g) { return g == Group::Gamma1 ? "Gamma1" : "Gamma2"; }

void ModFormExpr::validate() const {
  for (const auto& [c, m] : terms) {
    Rational w;
    for (const auto& gen : m) w += gen.weight();
    if (w != Rational(weight)) {
      throw std::invalid_argument("monomial of weight " + w.to_string() + " in a weight-" + std::to_string(weight) +
                                  " form");
    }
  }
}

Series ModFormExpr::expand(const Rational& n) const {
  Series out(n);
  std::map<FormsGenerator, Series> cache;
  for (const auto& [c, m] : terms) {
    Series prod = Series::constant(Rational(1), n);
    for (const auto& gen : m) {
      auto it = cache.find(gen);
      if (it == cache.end()) it = cache.emplace(gen, gen.expand(n)).first;
      prod = mul(prod, it->second);
    }
    out = add(out, prod.scaled(c));
  }
  return out.truncated(n);
}

std::string ModFormExpr::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [c, m] : terms) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    for (const auto& gen : m) s += "*" + gen.to_string();
  }
  return s;
}

std::string MLDEOperator::to_string() const {
  std::string s = "D^(" + std::to_string(order) + ")";
  for (std::size_t r = 0; r < coefficients.size(); ++r) {
    if (coefficients[r].is_zero()) continue;
    s += " + [" + coefficients[r].to_string() + "] D^(" + std::to_string(order - static_cast<int>(r) - 1) + ")";
  }
  return s;
}

Series serre_derivative(const Series& f, const Rational& k, const Rational& n) {
  require_accuracy(f, n);
  Series g = f.truncated(n);
  Series out = q_derivative(g);
  if (!k.is_zero()) {
    Series e2 = eisenstein(2, n - g.order());
    out = add(out, mul(e2, g).scaled(k));
  }
  return out.truncated(n);
}

Series dq_iter(const Series& f, int k, const Rational& n) {
  if (k < 0) throw std::invalid_argument("dq_iter needs k >= 0");
  require_accuracy(f, n);
  Series g = f.truncated(n);
  for (int j = 0; j < k; ++j) g = serre_derivative(g, Rational(2 * j), n);
  return g;
}

namespace {

// D^(0) f, ..., D^(k) f, each exact below n.
std::vector<Series> derivative_tower(const Series& f, int k, const Rational& n) {
  std::vector<Series> out{f.truncated(n)};
  for (int j = 0; j < k; ++j) out.push_back(serre_derivative(out.back(), Rational(2 * j), n));
  return out;
}

}  // namespace

Series mlde_apply(const MLDEOperator& op, const Series& f, const Rational& n) {
  require_accuracy(f, n);
  if (op.order < 1 || static_cast<int>(op.coefficients.size()) != op.order) {
    throw std::invalid_argument("malformed MLDE operator");
  }
  auto tower = derivative_tower(f, op.order, n);
  Series out = tower[static_cast<std::size_t>(op.order)];
  const Rational coeff_acc = n - tower[0].order();
  for (int r = 1; r <= op.order; ++r) {
    const auto& fr = op.coefficients[static_cast<std::size_t>(r - 1)];
    if (fr.is_zero()) continue;
    out = add(out, mul(fr.expand(coeff_acc), tower[static_cast<std::size_t>(op.order - r)]).truncated(n));
  }
  return out.truncated(n);
}

MLDEOperator builtin_mlde(int n) {
  using G = Group;
  auto R = [](std::int64_t a, std::int64_t b = 1) { return Rational(a, b); };
  switch (n) {
    case 2:
      return {1, G::Gamma2, {expr(G::Gamma2, 2, {{R(-1, 8), {T(1, 0)}}, {R(-1, 8), {T(0, 1)}}})}};
    case 3:
      return {2, G::Gamma1, {expr(G::Gamma1, 2, {}), expr(G::Gamma1, 4, {{R(-75), {E(4)}}})}};
    case 4:
      return {3,
              G::Gamma2,
              {expr(G::Gamma2, 2, {{R(-5, 16), {T(1, 0)}}, {R(5, 16), {T(0, 1)}}}),
               expr(G::Gamma2, 4, {{R(-77, 2304), {T(2, 0)}}, {R(-89, 1152), {T(1, 1)}}, {R(-17, 2304), {T(0, 2)}}}),
               expr(G::Gamma2, 6,
                    {{R(33, 4096), {T(3, 0)}},
                     {R(33, 4096), {T(2, 1)}},
                     {R(-197, 4096), {T(1, 2)}},
                     {R(3, 4096), {T(0, 3)}}})}};
    case 5:
      return {6,
              G::Gamma1,
              {expr(G::Gamma1, 2, {}),
               expr(G::Gamma1, 4, {{R(-161), {E(4)}}}),
               expr(G::Gamma1, 6, {{R(-28812, 75), {E(6)}}}),
               expr(G::Gamma1, 8, {{R(-8965187, 75), {E(8)}}}),
               expr(G::Gamma1, 10, {{R(-192787364, 125), {E(10)}}}),
               expr(G::Gamma1, 12, {{R(-5599287, 5), {E(4), E(4), E(4)}}, {R(-48993336, 25), {E(6), E(6)}}})}};
    default:
      throw UnsupportedN("no built-in MLDE for n = " + std::to_string(n));
  }
}

std::vector<Monomial> weight_basis(Group g, int w) {
  std::vector<Monomial> out;
  if (w < 0 || w % 2 != 0) return out;
  if (g == Group::Gamma1) {
    for (int a = w / 4; a >= 0; --a) {
      int rest = w - 4 * a;
      if (rest % 6 != 0) continue;
      Monomial m(static_cast<std::size_t>(a), E(4));
      m.insert(m.end(), static_cast<std::size_t>(rest / 6), E(6));
      out.push_back(std::move(m));
    }
  } else {
    int r = w / 2;
    for (int i = r; i >= 0; --i) out.push_back({T(i, r - i)});
  }
  return out;
}

MLDESearch find_mlde(const Series& f, int k, Group g, const Rational& n) {
  if (k < 1) throw std::invalid_argument("find_mlde needs order >= 1");
  require_accuracy(f, n);
  auto tower = derivative_tower(f, k, n);
  const Rational coeff_acc = n - tower[0].order();

  // Columns: basis monomial b of f_r times D^(k-r) f.
  std::vector<std::vector<Monomial>> bases;
  std::vector<Series> columns;
  for (int r = 1; r <= k; ++r) {
    bases.push_back(weight_basis(g, 2 * r));
    for (const auto& m : bases.back()) {
      ModFormExpr e{g, 2 * r, {{Rational(1), m}}};
      columns.push_back(mul(e.expand(coeff_acc), tower[static_cast<std::size_t>(k - r)]).truncated(n));
    }
  }
  const Series& rhs = tower[static_cast<std::size_t>(k)];

  std::int64_t L = rhs.exponent_denominator();
  for (const auto& c : columns) L = lcm64(L, c.exponent_denominator());
  std::map<std::int64_t, std::size_t> row_of;
  auto note_rows = [&](const Series& s) {
    for (const auto& [m, c] : s.terms_over(L)) row_of.try_emplace(m, 0);
  };
  note_rows(rhs);
  for (const auto& c : columns) note_rows(c);
  std::size_t idx = 0;
  for (auto& [m, row] : row_of) row = idx++;

  MLDESearch out;
  out.truncation = n;
  out.equations = row_of.size();
  out.unknowns = columns.size();
  if (out.equations <= out.unknowns) {
    throw InsufficientAccuracy("find_mlde below " + n.to_string() + " gives " + std::to_string(out.equations) +
                               " equations for " + std::to_string(out.unknowns) + " unknowns");
  }
  Matrix a(out.equations, std::vector<Rational>(out.unknowns));
  std::vector<Rational> b(out.equations);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [m, c] : columns[j].terms_over(L)) a[row_of.at(m)][j] = c;
  }
  for (const auto& [m, c] : rhs.terms_over(L)) b[row_of.at(m)] = -c;

  LinearSolution sol = solve_exact(a, b);
  out.kind = sol.kind;
  out.nullity = sol.nullity;
  if (sol.kind != LinearSolution::Kind::Unique) return out;
  out.solution = sol.x;
  MLDEOperator op{k, g, {}};
  std::size_t col = 0;
  for (int r = 1; r <= k; ++r) {
    ModFormExpr e{g, 2 * r, {}};
    for (const auto& m : bases[static_cast<std::size_t>(r - 1)]) {
      const Rational& x = sol.x[col++];
      if (!x.is_zero()) e.terms.emplace_back(x, m);
    }
    op.coefficients.push_back(std::move(e));
  }
  out.op = std::move(op);
  return out;
}

bool same_operator(const MLDEOperator& a, const MLDEOperator& b, const Rational& n) {
  if (a.order != b.order || a.coefficients.size() != b.coefficients.size()) return false;
  for (std::size_t r = 0; r < a.coefficients.size(); ++r) {
    if (!compare(a.coefficients[r].expand(n), b.coefficients[r].expand(n), n).equal()) return false;
  }
  return true;
}

MLDEVerification verify_builtin(int n, std::optional<Rational> n_bound) {
  MLDEOperator op = builtin_mlde(n);
  MLDEVerification out;
  out.n = n;
  out.truncation = n_bound ? *n_bound : Rational(15) - cp_central_charge(n) / Rational(24);
  Series ch = cp_char(n, out.truncation);
  Series residual = mlde_apply(op, ch, out.truncation);
  out.residual_zero = residual.is_zero();
  if (out.residual_zero) return out;
  out.first_residual = residual.term_list().front();
  out.rederived = find_mlde(ch, op.order, op.group, out.truncation);
  if (out.rederived->op) {
    const auto& found = *out.rederived->op;
    for (std::size_t r = 0; r < op.coefficients.size(); ++r) {
      const Rational acc = out.truncation;
      if (!compare(op.coefficients[r].expand(acc), found.coefficients[r].expand(acc), acc).equal()) {
        out.differing_coefficients.push_back(static_cast<int>(r) + 1);
      }
    }
  }
  return out;
}

}  // namespace qmod
