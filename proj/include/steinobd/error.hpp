#pragma once

#include <stdexcept>
#include <string>

namespace steinobd {

// Base for every error raised by the library. CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. line/column are 1-based; 0 means "not applicable".
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int column)
      : Error(format(msg, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  static std::string format(const std::string& msg, int line, int column) {
    if (line <= 0) return msg;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + msg;
  }
  int line_;
  int column_;
};

// Structurally invalid value (bad front word, bad handle, bad index).
class ValidationError : public Error {
public:
  using Error::Error;
};

// Family parameters outside the allowed range.
class ParamError : public Error {
public:
  using Error::Error;
};

// Two vectors (or pages) do not share the invariant an operation needs.
class MismatchError : public Error {
public:
  using Error::Error;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

} // namespace steinobd
