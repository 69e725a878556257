#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmod/qseries.hpp"

namespace qmod::cli {

/// Payload of `expand --json`.
struct ExpandReport {
  std::string object;
  std::int64_t L = 1;
  Rational acc;
  std::vector<std::pair<Rational, Rational>> terms;

  static ExpandReport from_series(std::string object, const Series& s);
  friend bool operator==(const ExpandReport&, const ExpandReport&) = default;
};

struct Mismatch {
  Rational exp;
  Rational lhs;
  Rational rhs;
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Payload of `verify --json`.
struct VerifyReport {
  std::string name;
  Rational order;
  bool equal = false;
  std::optional<Mismatch> first_mismatch;
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

std::string to_json(const ExpandReport& r);
std::string to_json(const VerifyReport& r);

/// Inverse of to_json; throws std::invalid_argument on malformed input.
ExpandReport expand_report_from_json(const std::string& text);
VerifyReport verify_report_from_json(const std::string& text);

/// "1 + q + 2*q^(3/2) - q^3 + O(q^8)".
std::string render_series(const Series& s);

}  // namespace qmod::cli
