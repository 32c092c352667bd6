#pragma once

// Thin adaptive Gauss-Kronrod wrapper. The adaptive recursion comes from
// Boost.Math; this layer fixes the rule order, converts silent depth
// exhaustion into a NumericalError and reports the error estimate.

#include "cpkit/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <string>

namespace cpkit::detail {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

inline constexpr unsigned kDefaultMaxDepth = 24;

// Relative tolerance is measured against the L1 norm of the integrand, so
// integrands with sign changes do not demand unbounded relative accuracy.
template <class F>
QuadResult integrate(F&& f, double lo, double hi, double rel_tol, const char* what,
                     unsigned max_depth = kDefaultMaxDepth) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  double error = 0.0;
  double l1 = 0.0;
  const double value = Rule::integrate(f, lo, hi, max_depth, rel_tol, &error, &l1);
  if (!std::isfinite(value)) {
    throw NumericalError(std::string(what) + ": non-finite quadrature result", error);
  }
  // Boost accepts panels against a local tolerance; allow the summed
  // estimate a modest slack before declaring non-convergence.
  const double scale = std::fmax(std::fabs(l1), std::fabs(value));
  if (error > 8.0 * rel_tol * scale && error > 1e-300) {
    throw NumericalError(std::string(what) + ": quadrature did not converge (error " +
                             std::to_string(error) + ", scale " + std::to_string(scale) + ")",
                         error);
  }
  return {value, error};
}

} // namespace cpkit::detail
