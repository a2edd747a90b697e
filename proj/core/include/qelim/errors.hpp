#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qelim {

/// Arity, alphabet, coordinate or input-vector mismatch.
class ShapeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Value outside the domain an operation accepts (non-probability, more than
/// two output labels where two are required, unknown generator name, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Caller violated an operation's precondition.
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A table or search space exceeds the configured size limits.
class CapacityError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Malformed text input. Carries the source name and 1-based line number.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line) {}

  [[nodiscard]] const std::string& source() const { return source_; }
  [[nodiscard]] std::size_t line() const { return line_; }

private:
  std::string source_;
  std::size_t line_;
};

}  // namespace qelim
