#pragma once

#include <stdexcept>
#include <string>

namespace harmsum {

/// Argument outside the mathematical domain of an operation (n = 0 for
/// harmonic numbers, nonpositive Gamma arguments, log of zero, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative procedure hit its budget before reaching the requested
/// tolerance.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed quantity violated an identity it must satisfy (for example the
/// imaginary part of delta_1 failing to cancel).
class consistency_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite integrand sample; `axis()` names the variable for 2D rules.
class quadrature_error : public std::runtime_error {
 public:
  quadrature_error(const std::string& what, std::string axis = {})
      : std::runtime_error(what), axis_(std::move(axis)) {}
  const std::string& axis() const noexcept { return axis_; }

 private:
  std::string axis_;
};

}  // namespace harmsum
