#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

// Malformed input: bad composition, cyclic relation, non-natural labeling, ...
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two independent computation routes disagreed. Always a bug.
class RouteMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Text/JSON input could not be parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace qsym
