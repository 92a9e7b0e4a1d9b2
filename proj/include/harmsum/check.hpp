#pragma once

#include <string>
#include <utility>
#include <variant>

#include "harmsum/complex.hpp"
#include "harmsum/real.hpp"

namespace harmsum {

/// Either side of an identity check.
using CheckValue = std::variant<Real, Complex>;

inline Complex as_complex(const CheckValue& v) {
  if (const auto* r = std::get_if<Real>(&v)) return Complex(*r);
  return std::get<Complex>(v);
}

inline bool is_complex(const CheckValue& v) { return std::holds_alternative<Complex>(v); }

/// One named identity check. `passed` is true exactly when abs_diff <= tol,
/// with abs_diff the real or complex modulus of lhs - rhs.
struct CheckOutcome {
  std::string name;
  CheckValue lhs;
  CheckValue rhs;
  Real abs_diff;
  Real tol;
  bool passed = false;
  std::string detail;
  double elapsed_ms = 0.0;

  static CheckOutcome compare(std::string name, CheckValue lhs, CheckValue rhs, Real tol, std::string detail = {}) {
    Real diff = is_complex(lhs) || is_complex(rhs) ? abs(as_complex(lhs) - as_complex(rhs))
                                                   : abs(std::get<Real>(lhs) - std::get<Real>(rhs));
    const bool ok = diff.is_finite() && diff <= tol;
    return CheckOutcome{std::move(name), std::move(lhs), std::move(rhs), std::move(diff),
                        std::move(tol), ok, std::move(detail), 0.0};
  }
};

}  // namespace harmsum
