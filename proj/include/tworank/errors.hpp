#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tworank {

// Requested object would not fit (vertex counts, d > 30, m > 8, ...).
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A parameter is outside the domain an operation supports.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inputs are individually well-formed but inconsistent with each other
// (partial ranking, rank ranges, ragged matrices).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text input. `line()` is 1-based; 0 means "no particular line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A constructive procedure ran out of retries. Treated as a bug signal.
class ConstructionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tworank
