// Text format for instances:
//
//   thrackle-instance v1
//   points <n>
//   <x> <y>            (n lines; a coordinate is <int> or <int>/<posint>)
//   hulls <m>
//   <i> <j> ...        (m lines of 0-based point indices)
//
// Lines whose first non-blank character is '#' and blank lines are ignored.
// Rationals must be in lowest terms and a denominator of 1 is written as a
// plain integer, so every instance has exactly one textual form. Variant
// flags are not part of the file.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cht/instance.hpp"

namespace cht {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Throws ParseError on any grammar violation, out-of-range index or
/// duplicate point.
Instance parse_instance(std::string_view text);

/// Canonical text: points in stored order, each hull's indices ascending,
/// hulls sorted lexicographically, LF line endings.
std::string serialize_instance(const Instance& inst);

/// Parses one coordinate token; nullopt unless it is canonical.
std::optional<Rational> parse_rational(std::string_view token);
std::string format_rational(const Rational& r);

}  // namespace cht
