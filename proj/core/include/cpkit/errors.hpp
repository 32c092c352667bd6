#pragma once

#include <stdexcept>
#include <string>

namespace cpkit {

/// Base of every exception raised by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// The operation is not defined for the requested model kind.
class UnsupportedModelError : public Error {
public:
  using Error::Error;
};

/// A model was evaluated at a point where it is singular (e.g. plasma ε at ξ = 0).
class SingularityError : public Error {
public:
  using Error::Error;
};

/// Input data violates a structural invariant (optical tables, polarizability tables).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Quadrature or series failed to reach the requested tolerance.
class NumericalError : public Error {
public:
  NumericalError(const std::string& what, double last_error_estimate)
      : Error(what), last_error_estimate_(last_error_estimate) {}

  double last_error_estimate() const noexcept { return last_error_estimate_; }

private:
  double last_error_estimate_;
};

/// Malformed or inconsistent configuration (registry files, CLI arguments).
class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace cpkit
