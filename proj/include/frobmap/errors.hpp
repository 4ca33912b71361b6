#pragma once

#include <stdexcept>
#include <string>

namespace frobmap {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Checked exponent or power arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Operands belong to different rings (or monomials of different widths).
class ContextMismatchError : public Error {
 public:
  using Error::Error;
};

// Invalid argument or configuration: non-prime characteristic, improper
// ideal, bad flag combination.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A basis computation exceeded the configured step ceiling.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Violated internal invariant; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace frobmap
