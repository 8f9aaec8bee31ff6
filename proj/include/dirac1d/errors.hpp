#pragma once

#include <stdexcept>
#include <string>

namespace dirac1d {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Run configuration could not be parsed or violates a constraint.
/// Carries the 1-based line number (0 when the fault is not tied to a line).
class ConfigError : public Error {
 public:
  ConfigError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Anything that goes wrong inside the numerics. The CLI maps this family
/// to exit code 3.
class NumericError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public NumericError {
 public:
  using NumericError::NumericError;
};

class ArgumentError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Grid too short or too coarse for the requested packet.
class ResolutionError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Expectation value requested for a state with (numerically) zero norm.
class DegenerateStateError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Quantity diverges at the requested argument (phase velocity at p = 0).
class DivergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

class TrackingError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace dirac1d
