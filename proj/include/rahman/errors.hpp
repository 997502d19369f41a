#pragma once

#include <stdexcept>
#include <string>

namespace rahman {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rational strings, parameter files).
class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class PartsMismatch : public Error {
 public:
  using Error::Error;
};

/// A forbidden parameter combination: one of the denominators vanishes.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::string expression)
      : Error("zero denominator: " + expression),
        expression_(std::move(expression)) {}

  const std::string& expression() const noexcept { return expression_; }

 private:
  std::string expression_;
};

class NotTraceless : public Error {
 public:
  NotTraceless() : Error("matrix is not traceless") {}
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class BasisMismatch : public Error {
 public:
  using Error::Error;
};

class NonCommutingOperators : public Error {
 public:
  NonCommutingOperators() : Error("operator arguments do not commute") {}
};

}  // namespace rahman
