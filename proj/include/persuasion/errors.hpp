#pragma once

#include <stdexcept>
#include <string>

namespace persuasion {

// Base class for all toolkit errors so callers can catch one family.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Scenario or input data violates a structural invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// A signal with (numerically) zero marginal probability was conditioned on.
class ZeroMarginalSignal : public Error {
 public:
  explicit ZeroMarginalSignal(const std::string& what) : Error(what) {}
};

// The LP solver failed to converge or certify a solution.
class SolverFailure : public Error {
 public:
  explicit SolverFailure(const std::string& what) : Error(what) {}
};

// Instance exceeds the size limits of an exhaustive routine.
class DimensionTooLarge : public Error {
 public:
  explicit DimensionTooLarge(const std::string& what) : Error(what) {}
};

// Operation only supports a fixed set of state-space dimensions.
class UnsupportedDimension : public Error {
 public:
  explicit UnsupportedDimension(const std::string& what) : Error(what) {}
};

// A point expected inside the image polytope lies outside it.
class PointOutsideImage : public Error {
 public:
  explicit PointOutsideImage(const std::string& what) : Error(what) {}
};

// Training loss became NaN or infinite.
class NonFiniteLoss : public Error {
 public:
  explicit NonFiniteLoss(const std::string& what) : Error(what) {}
};

// Obedient receiver requires as many signals as responses.
class ObedientShapeMismatch : public Error {
 public:
  explicit ObedientShapeMismatch(const std::string& what) : Error(what) {}
};

}  // namespace persuasion
