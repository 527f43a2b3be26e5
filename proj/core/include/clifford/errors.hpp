#pragma once

#include <stdexcept>
#include <string>

namespace clifford {

/// Raised when an argument violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The geodesic midpoint of antipodal points is not unique.
class AntipodalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two great 3-spheres that were required to be disjoint intersect.
class IntersectingSpheresError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_residual, long iterations)
      : std::runtime_error(what), last_residual_(last_residual), iterations_(iterations) {}

  double last_residual() const noexcept { return last_residual_; }
  long iterations() const noexcept { return iterations_; }

 private:
  double last_residual_;
  long iterations_;
};

}  // namespace clifford
