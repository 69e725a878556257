#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmod/qseries.hpp"

namespace qmod::cli {

/// Malformed object text; position is a 0-based offset into the input.
class SpecError : public std::invalid_argument {
 public:
  SpecError(std::size_t position, const std::string& what)
      : std::invalid_argument("at position " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A parsed object such as "eta:1/2", "vir:3:2" or "an:closed:4".
struct SeriesSpec {
  std::string name;
  std::vector<std::string> args;
  std::vector<std::size_t> arg_pos;
  std::string text;  // canonical rendering

  /// Expansion exact below n.
  Series build(const Rational& n) const;
};

/// Parses and validates name and arity; numeric arguments are exact rationals.
SeriesSpec parse_series_spec(std::string_view text);

/// One line per accepted object, for help text.
std::string series_spec_grammar();

}  // namespace qmod::cli
