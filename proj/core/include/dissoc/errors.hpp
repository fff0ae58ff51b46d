#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dissoc {

/// Malformed edge-list input. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Invalid argument to a library operation (bad k, overlapping constraints, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exponential oracle or sweep refused an input above its configured size limit.
class GuardError : public std::runtime_error {
 public:
  GuardError(const std::string& op, std::size_t limit, std::size_t got)
      : std::runtime_error(op + ": input size " + std::to_string(got) + " exceeds limit " +
                           std::to_string(limit)),
        limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

/// Fixed-width count arithmetic would have wrapped around.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Enumeration produced more sets than the caller allowed.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(std::size_t cap)
      : std::runtime_error("enumeration exceeded cap of " + std::to_string(cap) + " sets"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// A mathematical statement about trees was contradicted by a concrete input.
class StructureViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dissoc
