#pragma once

#include <stdexcept>
#include <string>

namespace gentle {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed presentation text.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Input that parses but is mathematically invalid (non-gentle, bad word, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A computed invariant contradicted an expected identity.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gentle
