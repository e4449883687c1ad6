#ifndef HYPVOL_BOUNDS_HPP
#define HYPVOL_BOUNDS_HPP

#include "hypvol/numerics.hpp"

namespace hypvol::bounds {

using numerics::Tolerances;

// Fixed parameters of the volume bound.  delta0 and lambda0 bracket the
// displacements treated as "short"; mu0 is the Margulis number used for the
// distant-volume bound; h is the circumradius h3(mu0/2); every verified
// bound must exceed vol_threshold.
struct Constants {
  double delta0 = 0.0;
  double lambda0 = 0.0;
  double mu0 = 0.0;
  double h = 0.0;
  double vol_threshold = 0.0;
};

// The canonical constants: delta0 = 0.58, lambda0 = log 7, mu0 = 1.119,
// h = h3(mu0/2), vol_threshold = 3.44.  Validates 3 delta0 < lambda0 <
// 4 delta0 on first use.
const Constants& constants();

// Half-open interval [lo, hi) of displacement values.
struct HalfOpenInterval {
  double lo = 0.0;
  double hi = 0.0;
};

// An interval is useful when it is a genuine subinterval of [delta0,
// lambda0) whose interior does not contain the branch point 0.7.
bool useful(const HalfOpenInterval& interval);

// Rectangle [l_lo, l_hi] x [y_lo, y_hi] of (geodesic length, offset) pairs.
struct ParamRectangle {
  double l_lo = 0.0;
  double l_hi = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;
};

// Which reading of the interval bound's cap-correction coefficient to use;
// see m_near.
enum class Mode { sound, paper_text };

// T_n(D) = Phi_n(delta0, D), the displacement bound for the n-th power.
// Requires D >= delta0.
double t_n(int n, double D);

// The angle comparison that forces a power of a short isometry to displace
// little:
//   cos(Theta(D/2, lambda/2) - Theta(T3/2, lambda/2))
//     < (cosh D cosh T3 - cosh 2D)/(sinh D sinh T3).
// Requires D < T3 < lambda.
bool grand_duke_holds(double D, double T3, double lambda);

// Certificate function for the angle comparison on [a, b]: with
// phi(x) = Phi_3(delta0, x) and theta(x) = Theta(x, lambda0/2),
//   Delta(a,b) = cos(theta(b/2) - theta(phi(a)/2))
//              - (coth b coth phi(b) - cosh 2b/(sinh a sinh phi(a))).
// Delta(a,b) < 0 certifies the comparison for every D in [a, b].
// Requires delta0 <= a < b <= 0.7.
double delta_ab(double a, double b);

// Volume bound near a point displaced by D >= delta0 by a primitive short
// isometry, before the third-power correction:
//   Vnearnought(D) = B(lambda0/2)
//                  - 2 sigma(lambda0/2, D/2, T2/2, Psi(D, T2)),  T2 = t_n(2,D).
double v_near_nought(double D, const Tolerances& tol = {});

// Near-volume bound with the third-power correction switched on at 0.7:
// v_near_nought(D) for delta0 <= D < 0.7, and
// v_near_nought(D) - 2 kappa(lambda0/2, t_n(3, D)/2) for D >= 0.7.
double v_near(double D, const Tolerances& tol = {});

// Z(D, lambda) = rho_4(D, lambda) - lambda/2, the margin by which a fourth
// point escapes the lambda/2-ball.  Requires (D, lambda) in X.
double z_gap(double D, double lambda);

// Volume far from the basepoint:
//   Z <= 0                  -> 0
//   0 < Z <= h              -> B(min(mu0/2, Z))
//   Z > h                   -> Vbor(mu0/2, h + lambda/2)
//                              + B(min(mu0/2, (Z - h)/2)).
// Non-negative and weakly decreasing in D.  Requires (D, lambda) in X.
double v_far(double D, double lambda);

// Lower bound for v_near over a useful interval I = [a, b):
//   mnearnought(I) = B(lambda0/2)
//     - 2 sigma(lambda0/2, a/2, Phi2(delta0,a)/2, Psi(b, Phi2(delta0,a))),
// minus, when I lies in [0.7, lambda0), a cap correction
// coef * kappa(lambda0/2, Phi3(delta0,a)/2) with coef = 2 in sound mode
// (matching the pointwise v_near) and coef = 1 in paper_text mode.
double m_near(const HalfOpenInterval& interval, Mode mode = Mode::sound,
              const Tolerances& tol = {});

// V_N(l, lambda) = B(lambda/2) - 2 kappa(lambda/2, l/2): volume of the
// lambda/2-ball minus the two caps shaved off by the axis displacement l.
// Decreasing in l, increasing in lambda.
double v_n(double l, double lambda);

// W(l, lambda) = v_far(l, lambda) + v_n(l, lambda).  Requires (l, lambda)
// in X.
double w_total(double l, double lambda);

// Starred forms pinned to the critical curve lambda = 2 rho(l) + y:
//   w_star(l, y) = W(l, 2 rho(l) + y),
//   chi(l, y)    = rho_4(l, 2 rho(l) + y) - (h + (2 rho(l) + y)/2).
// At y = 0 the curve touches the boundary of X; both take their limiting
// values there (chi -> +infinity, v_far saturates its ball term at mu0/2).
double w_star(double l, double y);
double chi(double l, double y);

// Per-rectangle lower bounds for w_star over S = [l0,l1] x [y0,y1]:
//   chi_s  = rho_4(l1, 2 rho(l0) + y1) - (h + (2 rho(l0) + y1)/2)
//   v_plus = Vbor(mu0/2, h + (2 rho(l1) + y0)/2) + B(min(mu0/2, chi_s/2))
//            (only defined when chi_s > 0; NaN otherwise)
//   v_minus= B(max(0, min(mu0/2, chi_s + h)))
//   v_n_s  = V_N(l1, 2 rho(l1) + y0)
//   w_s    = v_n_s + (chi_s > chi_threshold ? v_plus : v_minus).
struct RectBounds {
  double chi_s = 0.0;
  double v_plus = 0.0;
  double v_minus = 0.0;
  double v_n_s = 0.0;
  double w_s = 0.0;
  bool used_plus = false;
};
RectBounds rect_bounds(const ParamRectangle& rect, double chi_threshold = 0.1);

}  // namespace hypvol::bounds

#endif
