#pragma once

#include <stdexcept>
#include <string>

namespace lmm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller supplied an argument outside its documented domain (n = 0, h <= 0, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A model function returned a non-finite value on a required evaluation point.
class ModelDomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a genuine mathematical singularity (Q_l at argument 1).
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// The R^2 matrix produced a non-positive eigenvalue.
class DegeneracyError : public Error {
 public:
  DegeneracyError(const std::string& what, double value) : Error(what), value_(value) {}
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// An iterative kernel failed to converge; indicates a bug or a pathological input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lmm
