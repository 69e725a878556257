#include "commands.hpp"

#include <future>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmod/appell.hpp"
#include "qmod/cftlevels.hpp"
#include "qmod/mlde.hpp"
#include "qmod/modforms.hpp"
#include "qmod/vachar.hpp"
#include "report.hpp"
#include "series_spec.hpp"

namespace qmod::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Rational parse_rational_option(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected a rational number, got '" + text + "'");
  }
}

std::int64_t parse_int(const std::string& what, const std::string& text) {
  try {
    Rational r = Rational::parse(text);
    if (r.is_integer()) return r.to_int64();
  } catch (const std::exception&) {
  }
  throw UsageError(what + ": expected an integer, got '" + text + "'");
}

// Splits "name:a:b" into parts.
std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ':') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

struct Outcome {
  VerifyReport report;
  std::string detail;  // extra text-mode lines
  int code = kOk;
};

Outcome compare_outcome(std::string name, const Series& lhs, const Series& rhs, const Rational& order) {
  Outcome o;
  o.report.name = std::move(name);
  o.report.order = order;
  auto c = compare(lhs, rhs, order);
  o.report.equal = c.equal();
  if (!c.equal()) {
    o.report.first_mismatch = Mismatch{c.mismatch->exponent, c.mismatch->lhs, c.mismatch->rhs};
    o.code = kFalse;
  }
  return o;
}

Series eta_quotient_a2(const Rational& n) {
  // eta(tau)^12 / eta(tau/2)^6 = q^(3/8) (q;q)^12 / (q^(1/2);q^(1/2))^6
  const Rational lead(3, 8);
  const Rational target = n - lead;
  return mul(product_expand(Rational(1), Rational(1), 12, target),
             product_expand(Rational(1, 2), Rational(1, 2), -6, target))
      .shifted(lead);
}

Outcome verify_named(const std::string& name, const Rational& order) {
  auto parts = split(name);
  const std::string& id = parts[0];
  auto arity = [&](std::size_t n) {
    if (parts.size() != n + 1) throw UsageError("'" + id + "' takes " + std::to_string(n) + " argument(s)");
  };
  if (id == "lemma71") {
    arity(0);
    return compare_outcome(name, weyl_char(2, order), decomposition_sum(3, order).value, order);
  }
  if (id == "lemma72") {
    arity(0);
    return compare_outcome(name, sl3_char(order), decomposition_sum(4, order).value, order);
  }
  if (id == "gauss") {
    arity(0);
    Series lhs = mul(triangular_delta(order), product_expand(Rational(1), Rational(1), 1, order));
    Series rhs = power(product_expand(Rational(2), Rational(2), 1, order), 2);
    return compare_outcome(name, lhs, rhs, order);
  }
  if (id == "legendre") {
    arity(0);
    return compare_outcome(name, power(triangular_delta(order), 4), legendre_rhs(order), order);
  }
  if (id == "bq") {
    arity(0);
    Series d = scale_exponents(triangular_delta(order * Rational(2)), Rational(1, 2));
    return compare_outcome(name, bq_series(order), power(d, 4), order);
  }
  if (id == "cq") {
    arity(0);
    return compare_outcome(name, cq_series(order), power(triangular_delta(order), 4), order);
  }
  if (id == "a2eta") {
    arity(0);
    return compare_outcome(name, an_series(2, AnMethod::Thm81, order), eta_quotient_a2(order), order);
  }
  if (id == "anconsist") {
    arity(1);
    std::int64_t n = parse_int("anconsist", parts[1]);
    if (n < 2) throw UsageError("anconsist needs n >= 2");
    const AnMethod methods[] = {AnMethod::Thm81, AnMethod::Indef1, AnMethod::Indef2, AnMethod::Closed,
                                AnMethod::Appell};
    std::vector<Series> values;
    for (AnMethod m : methods) values.push_back(an_series(n, m, order));
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::size_t j = i + 1; j < values.size(); ++j) {
        Outcome o = compare_outcome(name, values[i], values[j], order);
        if (!o.report.equal) {
          o.detail = std::string("methods ") + std::string(to_string(methods[i])) + " and " +
                     std::string(to_string(methods[j])) + " differ";
          return o;
        }
      }
    }
    Outcome o = compare_outcome(name, values[0], values[0], order);
    o.detail = "thm81, indef1, indef2, closed, appell agree pairwise";
    return o;
  }
  if (id == "partition") {
    arity(2);
    std::int64_t J = parse_int("partition J", parts[1]);
    std::int64_t K = parse_int("partition K", parts[2]);
    if (J < 0 || K < 0) throw UsageError("partition bounds must be >= 0");
    PartitionReport r = partition_check(J, K);
    Outcome o;
    o.report.name = name;
    o.report.order = order;
    o.report.equal = r.ok();
    o.code = r.ok() ? kOk : kFalse;
    std::ostringstream os;
    os << r.pairs_checked << " pairs checked (" << r.excluded << " with k = 1 mod 3 skipped); class sizes";
    for (auto c : r.class_counts) os << " " << c;
    os << "\n  " << r.violations.size() << " pairs without exactly one class, " << r.reconstruction.size()
       << " reconstruction failures, " << r.weight.size() << " weight failures, " << r.exponent.size()
       << " exponent failures";
    os << "\n  note: " << r.index_range.size() << " pairs reconstruct to i outside the row's summation range";
    for (const auto& v : r.violations) {
      os << "\n  (" << v.j << "," << v.k << "): " << v.classes.size() << " classes";
    }
    for (const auto* list : {&r.reconstruction, &r.weight, &r.exponent}) {
      for (const auto& v : *list) os << "\n  (" << v.j << "," << v.k << ") class " << v.cls << ": " << v.what;
    }
    o.detail = os.str();
    return o;
  }
  throw UsageError("unknown identity '" + name + "'");
}

void print_outcome(const Outcome& o, bool json_out, bool quiet, std::ostream& out) {
  if (json_out) {
    out << to_json(o.report) << "\n";
    return;
  }
  if (o.report.equal) {
    out << o.report.name << ": EQUAL up to order " << o.report.order << "\n";
  } else if (o.report.first_mismatch) {
    const auto& m = *o.report.first_mismatch;
    out << o.report.name << ": NOT EQUAL, first mismatch at q^" << m.exp << ": lhs " << m.lhs << ", rhs " << m.rhs
        << "\n";
  } else {
    out << o.report.name << ": FAILED\n";
  }
  if (!quiet && !o.detail.empty()) out << "  " << o.detail << "\n";
}

std::string render_operator_coeffs(const MLDEOperator& op) {
  std::ostringstream os;
  for (std::size_t r = 0; r < op.coefficients.size(); ++r) {
    os << "  f" << r + 1 << " = " << op.coefficients[r].to_string() << "\n";
  }
  return os.str();
}

Group parse_group(const std::string& g) {
  if (g == "gamma1" || g == "Gamma1") return Group::Gamma1;
  if (g == "gamma2" || g == "Gamma2") return Group::Gamma2;
  throw UsageError("--group must be gamma1 or gamma2, got '" + g + "'");
}

void print_search(const MLDESearch& s, std::ostream& out) {
  switch (s.kind) {
    case LinearSolution::Kind::Unique: {
      out << "Unique (" << s.equations << " equations, " << s.unknowns << " unknowns, below q^" << s.truncation
          << ")\n";
      out << "  coefficients:";
      for (const auto& x : s.solution) out << " " << x;
      out << "\n" << render_operator_coeffs(*s.op);
      break;
    }
    case LinearSolution::Kind::Inconsistent:
      out << "Inconsistent (" << s.equations << " equations, " << s.unknowns << " unknowns, below q^" << s.truncation
          << ")\n";
      break;
    case LinearSolution::Kind::Ambiguous:
      out << "Ambiguous(" << s.nullity << ")\n";
      break;
  }
}

int cmd_levels(const std::string& which, bool json_out, bool quiet, std::ostream& out) {
  LevelCase c;
  if (which == "f4") {
    c = LevelCase::f4();
  } else if (which == "e8") {
    c = LevelCase::e8();
  } else {
    throw UsageError("levels: case must be f4 or e8, got '" + which + "'");
  }
  LevelReport r = conformal_levels(c);
  bool rechecked = true;
  for (const auto& root : r.levels) {
    auto [w, s] = w_charges(c, root.value);
    rechecked = rechecked && w == s;
  }
  if (json_out) {
    nlohmann::ordered_json j;
    j["case"] = c.name;
    auto levels = nlohmann::ordered_json::array();
    for (const auto& root : r.levels) levels.push_back({{"k", root.value.to_string()}, {"multiplicity", root.multiplicity}});
    j["levels"] = std::move(levels);
    j["degree"] = r.degree();
    j["residual_degree"] = std::max(0, r.residual.degree());
    j["rechecked"] = rechecked;
    out << j.dump() << "\n";
    return rechecked ? kOk : kInternal;
  }
  out << c.name << " conformal levels:";
  for (const auto& root : r.levels) {
    out << " " << root.value;
    if (root.multiplicity > 1) out << " (multiplicity " << root.multiplicity << ")";
  }
  out << "\n";
  if (!quiet) {
    out << "  cleared numerator: " << r.cleared.to_string() << " (degree " << r.degree() << ")\n";
    out << "  residual factor: "
        << (r.has_irrational_roots() ? r.residual.to_string() + " (non-rational roots remain)" : "none") << "\n";
    if (!r.discarded_poles.empty()) {
      out << "  discarded poles:";
      for (const auto& p : r.discarded_poles) out << " " << p;
      out << "\n";
    }
    for (const auto& root : r.levels) {
      auto [w, s] = w_charges(c, root.value);
      out << "  k = " << root.value << ": c_W = " << w << ", c_sug = " << s << (w == s ? "" : "  MISMATCH") << "\n";
    }
  }
  return rechecked ? kOk : kInternal;
}

int cmd_mlde_verify(int n, std::optional<Rational> trunc, bool quiet, std::ostream& out) {
  MLDEVerification v = verify_builtin(n, trunc);
  MLDEOperator op = builtin_mlde(n);
  if (v.residual_zero) {
    out << "mlde n=" << n << ": residual vanishes below q^" << v.truncation << "\n";
    if (!quiet) out << "  coefficients confirmed:\n" << render_operator_coeffs(op);
    return kOk;
  }
  out << "mlde n=" << n << ": residual nonzero below q^" << v.truncation << ", first term "
      << v.first_residual->second << "*q^" << v.first_residual->first << "\n";
  if (!quiet) {
    out << "  built-in operator:\n" << render_operator_coeffs(op);
    out << "  re-derived at order " << op.order << " over " << to_string(op.group) << ": ";
    print_search(*v.rederived, out);
    if (!v.differing_coefficients.empty()) {
      out << "  coefficients differing from the built-in operator:";
      for (int r : v.differing_coefficients) out << " f" << r;
      out << "\n";
    }
  }
  return kFalse;
}

}  // namespace

std::string verify_names() {
  return "  lemma71        ch[M_(2)] = sum of affine x Virasoro products, p = 3\n"
         "  lemma72        ch[L_{-3/2}(sl3)] = same sum for p = 4\n"
         "  gauss          Delta(q) (q;q) = (q^2;q^2)^2\n"
         "  legendre       Delta(q)^4 = sum (2k+1) q^(((2j+1)(2k+1)-1)/2)\n"
         "  bq, cq         the auxiliary double sums against Delta(q^(1/2))^4 and Delta(q)^4\n"
         "  a2eta          A_2 = eta^12 / eta(tau/2)^6\n"
         "  anconsist:n    five constructions of A_n agree\n"
         "  partition:J:K  eight-class table for 0 <= j <= J, 0 <= k <= K\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series toolkit for vertex-algebra characters"};
  app.require_subcommand(1);
  bool json_out = false;
  bool quiet = false;
  app.add_flag("--json", json_out, "Machine-readable output");
  app.add_flag("--quiet", quiet, "Print only the result");

  std::string order_text = "20";

  auto* expand = app.add_subcommand("expand", "Print a q-expansion");
  std::string expand_spec;
  expand->add_option("object", expand_spec, "Object, e.g. eta, cp:3, an:closed:4")->required();
  expand->add_option("--order", order_text, "Exponent bound (exclusive)");
  expand->add_flag("--json", json_out, "Machine-readable output");
  expand->add_flag("--quiet", quiet, "Print only the result");
  expand->footer("Objects:\n" + series_spec_grammar());

  auto* verify = app.add_subcommand("verify", "Check an identity coefficient by coefficient");
  std::vector<std::string> verify_ids;
  std::string lhs_text, rhs_text;
  verify->add_option("names", verify_ids, "Identity names (run in parallel)");
  verify->add_option("--lhs", lhs_text, "Left object");
  verify->add_option("--rhs", rhs_text, "Right object");
  verify->add_option("--order", order_text, "Exponent bound (exclusive)");
  verify->add_flag("--json", json_out, "Machine-readable output");
  verify->add_flag("--quiet", quiet, "Print only the result");
  verify->footer("Identities:\n" + verify_names());

  auto* mlde = app.add_subcommand("mlde", "Verify or search modular linear differential equations");
  std::string mlde_what;
  std::string series_text;
  std::string mlde_order_text;
  std::string group_text;
  std::string trunc_text;
  mlde->add_option("what", mlde_what, "verify:n (n = 2..5) or find")->required();
  mlde->add_option("--series", series_text, "Object for find");
  mlde->add_option("--order", mlde_order_text, "Differential order for find");
  mlde->add_option("--group", group_text, "gamma1 or gamma2");
  mlde->add_option("--trunc", trunc_text, "Exponent bound (exclusive)");
  mlde->add_flag("--json", json_out, "Machine-readable output");
  mlde->add_flag("--quiet", quiet, "Print only the result");

  auto* levels = app.add_subcommand("levels", "Conformal levels for the F4 and E8 cases");
  std::string level_case;
  levels->add_option("case", level_case, "f4 or e8")->required();
  levels->add_flag("--json", json_out, "Machine-readable output");
  levels->add_flag("--quiet", quiet, "Print only the result");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (expand->parsed()) {
      Rational order = parse_rational_option("--order", order_text);
      SeriesSpec spec = parse_series_spec(expand_spec);
      Series s = spec.build(order);
      if (json_out) {
        out << to_json(ExpandReport::from_series(spec.text, s)) << "\n";
      } else {
        if (!quiet) out << spec.text << " below q^" << order << ":\n";
        out << render_series(s) << "\n";
      }
      return kOk;
    }
    if (verify->parsed()) {
      Rational order = parse_rational_option("--order", order_text);
      if (!lhs_text.empty() || !rhs_text.empty()) {
        if (lhs_text.empty() || rhs_text.empty()) throw UsageError("--lhs and --rhs go together");
        if (!verify_ids.empty()) throw UsageError("give either identity names or --lhs/--rhs");
        SeriesSpec l = parse_series_spec(lhs_text);
        SeriesSpec r = parse_series_spec(rhs_text);
        Outcome o = compare_outcome(l.text + " = " + r.text, l.build(order), r.build(order), order);
        print_outcome(o, json_out, quiet, out);
        return o.code;
      }
      if (verify_ids.empty()) throw UsageError("verify needs an identity name or --lhs/--rhs");
      // Independent identities run concurrently; output stays in argument order.
      std::vector<std::future<Outcome>> jobs;
      for (const auto& id : verify_ids) {
        jobs.push_back(std::async(std::launch::async, [id, order] { return verify_named(id, order); }));
      }
      int code = kOk;
      std::exception_ptr first_error;
      for (auto& job : jobs) {
        try {
          Outcome o = job.get();
          print_outcome(o, json_out, quiet, out);
          code = std::max(code, o.code);
        } catch (...) {
          if (!first_error) first_error = std::current_exception();
        }
      }
      if (first_error) std::rethrow_exception(first_error);
      return code;
    }
    if (mlde->parsed()) {
      std::optional<Rational> trunc;
      if (!trunc_text.empty()) trunc = parse_rational_option("--trunc", trunc_text);
      if (mlde_what.rfind("verify:", 0) == 0) {
        int n = static_cast<int>(parse_int("verify:n", mlde_what.substr(7)));
        if (n < 2 || n > 5) throw UsageError("verify:n needs n in 2..5");
        return cmd_mlde_verify(n, trunc, quiet, out);
      }
      if (mlde_what != "find") throw UsageError("mlde: expected verify:n or find, got '" + mlde_what + "'");
      if (series_text.empty() || mlde_order_text.empty() || group_text.empty() || !trunc) {
        throw UsageError("mlde find needs --series, --order, --group and --trunc");
      }
      SeriesSpec spec = parse_series_spec(series_text);
      int k = static_cast<int>(parse_int("--order", mlde_order_text));
      if (k < 1) throw UsageError("--order must be >= 1");
      MLDESearch s = find_mlde(spec.build(*trunc), k, parse_group(group_text), *trunc);
      print_search(s, out);
      return kOk;
    }
    if (levels->parsed()) return cmd_levels(level_case, json_out, quiet, out);
  } catch (const SpecError& e) {
    err << "error: cannot parse object " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InsufficientAccuracy& e) {
    err << "internal error: accuracy violated: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const qmod::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace qmod::cli
