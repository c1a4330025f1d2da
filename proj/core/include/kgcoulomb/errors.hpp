#pragma once

#include <stdexcept>
#include <string>

namespace kgc {

enum class ErrorKind {
  invalid_argument,
  invalid_quantum_numbers,
  supercritical_charge,
  domain,
  fisher_undefined,
  integrand_failure,
  integration_failure,
};

// Base for every error raised by the library. Callers that only need to map
// errors to exit codes can switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorKind::invalid_argument, what) {}
};

class InvalidQuantumNumbers : public Error {
 public:
  InvalidQuantumNumbers(std::string constraint, const std::string& what)
      : Error(ErrorKind::invalid_quantum_numbers, what),
        constraint_(std::move(constraint)) {}

  // The violated relation, e.g. "l <= n-1".
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

class SupercriticalCharge : public Error {
 public:
  explicit SupercriticalCharge(const std::string& what)
      : Error(ErrorKind::supercritical_charge, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::domain, what) {}
};

class FisherUndefined : public Error {
 public:
  explicit FisherUndefined(const std::string& what)
      : Error(ErrorKind::fisher_undefined, what) {}
};

class IntegrandFailure : public Error {
 public:
  IntegrandFailure(double abscissa, const std::string& what)
      : Error(ErrorKind::integrand_failure, what), abscissa_(abscissa) {}

  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

}  // namespace kgc
