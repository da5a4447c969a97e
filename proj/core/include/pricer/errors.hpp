#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pricer {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A malformed input file. Carries file, line (1-based, header = 1) and the
/// offending field so callers can report row-addressed diagnostics.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, std::string field, const std::string& message)
      : Error(file + ":" + std::to_string(line) + ": field '" + field + "': " + message),
        file_(std::move(file)),
        line_(line),
        field_(std::move(field)) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::string file_;
  std::size_t line_;
  std::string field_;
};

/// A series or table is too short for the requested operation.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Input is structurally valid but numerically degenerate (constant series,
/// singular regressor matrix, month with zero requests, ...).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// MA parameters outside the invertibility region.
class NonInvertibleError : public Error {
 public:
  using Error::Error;
};

/// AR parameters outside the stationarity region.
class NonStationaryError : public Error {
 public:
  using Error::Error;
};

/// Spline evaluation requested outside the knot range.
class ExtrapolationError : public Error {
 public:
  using Error::Error;
};

/// Optimizer failed to converge. Carries the best parameter vector found so
/// the caller can inspect or restart from it.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, std::vector<double> best_parameters)
      : Error(message), best_parameters_(std::move(best_parameters)) {}

  const std::vector<double>& best_parameters() const noexcept { return best_parameters_; }

 private:
  std::vector<double> best_parameters_;
};

}  // namespace pricer
