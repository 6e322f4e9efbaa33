#pragma once

#include <stdexcept>
#include <string>

namespace ecsc {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can map categories onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (e.g. r <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A closed form exists only for a subset of configurations (g != 1, n > 2, ...).
class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

/// Quantum numbers beyond what a closed-form expression covers.
class OutOfRange : public UnsupportedConfiguration {
 public:
  using UnsupportedConfiguration::UnsupportedConfiguration;
};

/// Evaluation at (or numerically too close to) a node of the radial function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Input that makes a formula degenerate, e.g. delta = 0 where 1/delta appears.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  QuadratureFailure(const std::string& what, double estimate, double error_estimate)
      : Error(what), estimate_(estimate), error_estimate_(error_estimate) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

class IntegrationFailure : public Error {
 public:
  using Error::Error;
};

/// The requested level has merged with the continuum at this screening.
class NoBoundState : public Error {
 public:
  using Error::Error;
};

}  // namespace ecsc
