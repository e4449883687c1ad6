#ifndef HYPVOL_NUMERICS_HPP
#define HYPVOL_NUMERICS_HPP

#include <functional>

#include "hypvol/errors.hpp"

namespace hypvol::numerics {

struct Tolerances {
  double quad_abs = 1e-10;      // absolute quadrature target
  double quad_rel = 1e-10;      // relative quadrature target
  double root_tol = 1e-12;      // bracket width at which a root is accepted
  double domain_clamp = 1e-12;  // rounding slack absorbed at domain edges

  void validate() const;  // throws domain_error unless all fields > 0
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // >= 0
  int subdivisions = 1;         // panels in the final partition, >= 1
};

// Adaptive quadrature of f over [a, b].  Each panel is estimated with a
// Gauss(7)/Kronrod(15) pair; the panel with the largest error estimate is
// bisected until the summed estimate drops below
// max(quad_abs, quad_rel * |value|).  A hard panel budget turns runaway
// refinement into convergence_error instead of a silent wrong answer; a NaN
// from the integrand is a domain_error.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const Tolerances& tol = {});

// Root of a continuous, strictly monotone g on [lo, hi].  Requires a sign
// change (or an exact zero) at the endpoints.  Bisection with a secant
// proposal accepted whenever it lands safely inside the bracket; the result
// is within root_tol of the true root.
double solve_bracketed(const std::function<double(double)>& g, double lo,
                       double hi, const Tolerances& tol = {});

enum class InverseKind { arccosh, arctanh, arccos, arcsin, arcsech, arcsec };

// Inverse functions with the argument clamped onto the closed mathematical
// domain when it lies within tol.domain_clamp of it.  Compositions such as
// tanh w / tanh R at w -> R or cosh Phi at Phi -> 0 land at 1 +/- one ulp;
// the clamp absorbs that, while a genuine violation is a domain_error.
// Exact boundaries give exact limits: arccosh(1) = 0, arccos(1) = 0.
double safe_inverse(InverseKind kind, double x, const Tolerances& tol = {});

}  // namespace hypvol::numerics

#endif
