#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sftglue {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: inadmissible words, bad literals, inconsistent lengths.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A structural hypothesis of an operation does not hold for the given
/// graph (not irreducible, no branching vertex, empty essential part, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Raised when the caller hands an operation data that fails its stated
/// precondition, as opposed to the operation's own property failing.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Text that could not be parsed. Line and column are 1-based.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(what + " (line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace sftglue
