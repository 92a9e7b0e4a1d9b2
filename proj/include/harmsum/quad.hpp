#pragma once

// Tanh-sinh (double-exponential) quadrature on [0, 1].
//
// x(t) = 1/(1 + exp(-pi sinh t)), dx/dt = pi cosh t x (1-x). Level k uses the
// step h = 2^-k and only adds the nodes that are new at that level, so the
// running sum is reused across levels. Nodes are stored as the pair
// (x, 1-x) computed independently, so integrands that need the distance to
// the right endpoint can take it without cancellation.
//
// The abscissa list for a level is truncated once x < 2^-(2 bits + 20): past
// that point w(t) f(x) is negligible even for x^-1/2 type singularities.

#include <concepts>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "harmsum/errors.hpp"
#include "harmsum/real.hpp"

namespace harmsum {

struct QuadratureResult {
  Real value;
  Real error_estimate;
  long evaluations = 0;
  bool converged = false;
  int levels = 0;  // last level evaluated
};

struct QuadratureOptions {
  int max_level = 12;
  int min_level = 3;  // never accept agreement between the coarsest levels
};

/// f(x) on (0, 1).
template <class F>
concept Integrand1D = std::invocable<F&, const Real&> && std::convertible_to<std::invoke_result_t<F&, const Real&>, Real>;

/// f(x, 1 - x): the complement is supplied to full relative precision.
template <class F>
concept Integrand1DWithComplement = std::invocable<F&, const Real&, const Real&> &&
                                    std::convertible_to<std::invoke_result_t<F&, const Real&, const Real&>, Real>;

namespace detail {

struct TanhSinhNode {
  Real left;    // x(-t) = 1 - x(t), near 0
  Real right;   // x(t) = 1 - left, near 1
  Real weight;  // pi cosh t x(t) (1 - x(t))
  bool center;  // t = 0: single abscissa 1/2
};

using NodeList = std::vector<TanhSinhNode>;

class TanhSinhCache {
 public:
  static std::shared_ptr<const NodeList> level(int k, bits_t bits) {
    static TanhSinhCache cache;
    {
      std::lock_guard lock(cache.mu_);
      auto it = cache.levels_.find({k, bits});
      if (it != cache.levels_.end()) return it->second;
    }
    // Built outside the lock; concurrent builders produce identical lists.
    auto built = std::make_shared<const NodeList>(build(k, bits));
    std::lock_guard lock(cache.mu_);
    return cache.levels_.emplace(std::make_pair(k, bits), std::move(built)).first->second;
  }

 private:
  static NodeList build(int k, bits_t bits) {
    const bits_t w = bits + 16;
    const Real pi = Real::pi(w);
    const Real cutoff = Real::pow2(-2 * static_cast<long>(bits) - 20, w);
    const Real h = Real::pow2(-k, w);
    NodeList nodes;
    // Level 0 visits t = 0, 1, 2, ...; level k >= 1 visits the odd multiples of 2^-k.
    const long first = k == 0 ? 0 : 1;
    const long stride = k == 0 ? 1 : 2;
    for (long j = first;; j += stride) {
      const Real t = h * j;
      const Real e = exp(-(pi * sinh(t)));
      const Real one_plus_e = 1 + e;
      const Real left = e / one_plus_e;
      if (left < cutoff) break;
      const Real right = 1 / one_plus_e;
      const Real weight = pi * cosh(t) * left * right;
      nodes.push_back(TanhSinhNode{left.with_bits(bits), right.with_bits(bits), weight.with_bits(bits), j == 0});
    }
    return nodes;
  }

  std::mutex mu_;
  std::map<std::pair<int, bits_t>, std::shared_ptr<const NodeList>> levels_;
};

inline Real checked_sample(Real value, const Real& x, const char* axis) {
  if (!value.is_finite()) {
    throw quadrature_error("non-finite integrand sample at " + std::string(axis) + " = " + x.to_string(25), axis);
  }
  return value;
}

template <class F>
QuadratureResult tanh_sinh(F&& f, const Real& tol, bits_t bits, const QuadratureOptions& opts, const char* axis) {
  if (!(tol >= 0)) throw std::invalid_argument("integrate: tol must be nonnegative");
  const bits_t acc_bits = bits + 8;
  Real sum(acc_bits);
  Real previous(bits);
  QuadratureResult out{Real(bits), Real(bits), 0, false, 0};
  const Real one(1L, bits);

  for (int k = 0; k <= opts.max_level; ++k) {
    const auto nodes = TanhSinhCache::level(k, bits);
    for (const auto& node : *nodes) {
      if constexpr (Integrand1DWithComplement<F>) {
        if (node.center) {
          sum += node.weight * checked_sample(f(node.right, node.left), node.right, axis);
          out.evaluations += 1;
        } else {
          sum += node.weight * (checked_sample(f(node.left, node.right), node.left, axis) +
                                checked_sample(f(node.right, node.left), node.right, axis));
          out.evaluations += 2;
        }
      } else {
        sum += node.weight * checked_sample(f(node.left), node.left, axis);
        out.evaluations += 1;
        // x(t) rounded to 1 at this precision: the abscissa may not touch the endpoint.
        if (!node.center && node.right < one) {
          sum += node.weight * checked_sample(f(node.right), node.right, axis);
          out.evaluations += 1;
        }
      }
    }
    Real current = ldexp(sum, -k).with_bits(bits);
    out.levels = k;
    if (k > 0) {
      out.error_estimate = abs(current - previous);
      if (k >= opts.min_level && out.error_estimate <= tol) {
        out.value = std::move(current);
        out.converged = true;
        return out;
      }
    }
    previous = std::move(current);
  }
  out.value = std::move(previous);
  return out;
}

}  // namespace detail

/// Integral of f over [0, 1]. `converged` is false when max_level is reached
/// before two successive levels agree within `tol`; a non-finite sample throws
/// quadrature_error.
template <class F>
  requires Integrand1D<F> || Integrand1DWithComplement<F>
QuadratureResult integrate(F&& f, const Real& tol, const PrecisionConfig& precision, const QuadratureOptions& opts = {}) {
  return detail::tanh_sinh(f, tol, precision.bits(), opts, "x");
}

/// f(u, v) on the open unit square.
template <class F>
concept Integrand2D = std::invocable<F&, const Real&, const Real&> &&
                      std::convertible_to<std::invoke_result_t<F&, const Real&, const Real&>, Real>;

/// Iterated integral: inner in u at tol/10, outer in v at tol. The error
/// estimate adds the outer estimate to the worst inner estimate.
template <Integrand2D F>
QuadratureResult integrate2d(F&& f, const Real& tol, const PrecisionConfig& precision,
                             const QuadratureOptions& opts = {}) {
  const bits_t bits = precision.bits();
  const Real inner_tol = tol / 10;
  Real worst_inner(bits);
  long inner_evaluations = 0;
  bool inner_converged = true;

  auto outer_integrand = [&](const Real& v) -> Real {
    auto inner = [&](const Real& u) -> Real { return f(u, v); };
    QuadratureResult r = [&] {
      try {
        return detail::tanh_sinh(inner, inner_tol, bits, opts, "u");
      } catch (const quadrature_error& e) {
        throw quadrature_error(std::string(e.what()) + " (outer v = " + v.to_string(25) + ")", "u");
      }
    }();
    inner_evaluations += r.evaluations;
    inner_converged = inner_converged && r.converged;
    if (worst_inner < r.error_estimate) worst_inner = r.error_estimate;
    return std::move(r.value);
  };

  QuadratureResult outer = detail::tanh_sinh(outer_integrand, tol, bits, opts, "v");
  outer.evaluations = inner_evaluations;
  outer.error_estimate += worst_inner;
  outer.converged = outer.converged && inner_converged && outer.error_estimate <= tol;
  return outer;
}

}  // namespace harmsum
