#ifndef SEQDUAL_ERRORS_HPP
#define SEQDUAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqdual {

/// Raised by the rational / sequence / problem-file parsers. Carries the
/// offset (column within the parsed text) and, for multi-line inputs, the
/// line number; both are 1-based. line() == 0 means "single-line input".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t column, std::size_t line = 0)
      : std::runtime_error(format(message, column, line)),
        column_(column),
        line_(line) {}

  std::size_t column() const noexcept { return column_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& message, std::size_t column,
                            std::size_t line) {
    std::string where;
    if (line > 0) where += "line " + std::to_string(line) + ", ";
    where += "column " + std::to_string(column);
    return where + ": " + message;
  }

  std::size_t column_;
  std::size_t line_;
};

/// Raised when a value is outside the mathematical domain of an operation,
/// e.g. pairing or l1 norm applied to a sequence with a nonzero tail.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace seqdual

#endif
