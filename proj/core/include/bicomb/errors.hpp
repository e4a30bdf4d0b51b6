#pragma once

#include <stdexcept>
#include <string>

namespace bicomb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation applied to a point or isometry of the wrong space kind.
class KindMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Iteration did not reach its tolerance. `gap` is the last observed residual.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double gap) : Error(what), gap_(gap) {}
  double gap() const { return gap_; }

 private:
  double gap_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace bicomb
