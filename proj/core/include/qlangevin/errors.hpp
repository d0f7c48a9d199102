#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlangevin {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Raised when a matrix required to be Hermitian is not, within tolerance.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

class PositivityError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Quadrature or series result whose error estimate exceeds the requested tolerance.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

// Singular or ill-posed linear system.
class SolverError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

// Density matrix left the physical set during time stepping.
class StateHealthError : public Error {
 public:
  StateHealthError(std::size_t step, const std::string& what)
      : Error("state health violated at step " + std::to_string(step) + ": " + what),
        step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace qlangevin
