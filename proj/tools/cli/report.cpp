#include "report.hpp"

#include <sstream>

#include <json.hpp>

namespace qmod::cli {

using json = nlohmann::ordered_json;

namespace {

Rational rational_field(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a rational string");
  return Rational::parse(j.get<std::string>());
}

json parse_object(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  return j;
}

}  // namespace

ExpandReport ExpandReport::from_series(std::string object, const Series& s) {
  return {std::move(object), s.exponent_denominator(), s.accuracy(), s.term_list()};
}

std::string to_json(const ExpandReport& r) {
  json terms = json::array();
  for (const auto& [e, c] : r.terms) terms.push_back(json::array({e.to_string(), c.to_string()}));
  json j;
  j["object"] = r.object;
  j["L"] = r.L;
  j["acc"] = r.acc.to_string();
  j["terms"] = std::move(terms);
  return j.dump();
}

std::string to_json(const VerifyReport& r) {
  json j;
  j["name"] = r.name;
  j["order"] = r.order.to_string();
  j["equal"] = r.equal;
  if (r.first_mismatch) {
    j["first_mismatch"] = {{"exp", r.first_mismatch->exp.to_string()},
                           {"lhs", r.first_mismatch->lhs.to_string()},
                           {"rhs", r.first_mismatch->rhs.to_string()}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  return j.dump();
}

ExpandReport expand_report_from_json(const std::string& text) {
  json j = parse_object(text);
  try {
    ExpandReport r;
    r.object = j.at("object").get<std::string>();
    r.L = j.at("L").get<std::int64_t>();
    r.acc = rational_field(j.at("acc"));
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 2) throw std::invalid_argument("term must be a pair");
      r.terms.emplace_back(rational_field(t[0]), rational_field(t[1]));
    }
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

VerifyReport verify_report_from_json(const std::string& text) {
  json j = parse_object(text);
  try {
    VerifyReport r;
    r.name = j.at("name").get<std::string>();
    r.order = rational_field(j.at("order"));
    r.equal = j.at("equal").get<bool>();
    const json& m = j.at("first_mismatch");
    if (!m.is_null()) r.first_mismatch = Mismatch{rational_field(m.at("exp")), rational_field(m.at("lhs")), rational_field(m.at("rhs"))};
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

std::string render_series(const Series& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.term_list()) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (e.is_zero()) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")") << "*";
    os << "q";
    if (e != Rational(1)) os << "^" << (e.is_integer() && e.sign() > 0 ? e.to_string() : "(" + e.to_string() + ")");
  }
  if (!first) os << " + ";
  os << "O(q^" << (s.accuracy().is_integer() && s.accuracy().sign() >= 0 ? s.accuracy().to_string() : "(" + s.accuracy().to_string() + ")") << ")";
  return os.str();
}

}  // namespace qmod::cli
