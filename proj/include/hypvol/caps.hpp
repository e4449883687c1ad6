#ifndef HYPVOL_CAPS_HPP
#define HYPVOL_CAPS_HPP

#include "hypvol/numerics.hpp"

namespace hypvol::caps {

using numerics::Tolerances;

// A cap: the part of a closed ball of radius R cut off by a half-space whose
// bounding plane lies at distance w from the center, tilted by the spherical
// angle `direction` relative to a reference direction.  Empty iff w >= R.
struct CapSpec {
  double ball_radius = 1.0;
  double plane_distance = 0.0;
  double direction = 0.0;
  bool empty() const { return plane_distance >= ball_radius; }
};

// Euclidean data of the upper-half-space picture behind iota_perp: the
// hemisphere representing the tilted plane has radius v and center offset c;
// the circle where it meets the ball sphere has radius mu and projects to an
// ellipse with axis ratio rho centered at offset m; theta0 bounds the polar
// angle of the integration region.
struct PerpCapGeometry {
  double v = 0.0;
  double c = 0.0;
  double mu = 0.0;
  double rho = 0.0;
  double m = 0.0;
  double theta0 = 0.0;
};

// Hyperbolic length of the arc of a unit semicircle geodesic (upper
// half-plane) from its apex to the point at Euclidean angle theta from the
// apex; satisfies cosh d = sec theta for theta in [0, pi/2).
double apex_arc_distance(double theta);

// Volume of one cap.  kappa(R, w) = 0 for w >= R, B(R)/2 at w = 0, and for
// 0 < w < R the closed form
//   pi (e^R cosh R - cosh R / L(eps) - log L(eps) - R
//       + (1/2) log(e^{-2w} - eps^2) + w)
// with eps = e^{-w} sqrt(1 - cosh^2 w / cosh^2 R) and
// L(r) = cosh R - sqrt(sinh^2 R - r^2).  Weakly decreasing in w.
double kappa(double R, double w);

// Geometry of the two-cap intersection iota(R, w, 0, alpha) for
// 0 < w < R and alpha in (pi/2, pi).
PerpCapGeometry perp_cap_geometry(double R, double w, double alpha,
                                  const Tolerances& tol = {});

// iota(R, w, 0, alpha) for 0 < w < R and alpha in (pi/2, pi): volume of the
// intersection of the cap at distance w, tilted by alpha, with the half-ball
// cut at the center.  Zero when m > rho * mu (the caps barely miss);
// otherwise a single adaptive quadrature in the polar angle, the radial
// integral being evaluated in closed form.
double iota_perp(double R, double w, double alpha, const Tolerances& tol = {});

// iota(R, w, 0, alpha) for all alpha in [0, pi] and w >= 0.  Dispatch:
// w >= R -> 0; alpha = 0 -> kappa; alpha = pi -> 0; alpha = pi/2 ->
// kappa/2; alpha in (pi/2, pi) -> iota_perp; alpha in (0, pi/2) ->
// kappa - iota_perp(R, w, pi - alpha), by the complements identity
//   iota(R,w,0,alpha) + iota(R,w,0,pi-alpha) = kappa(R,w).
// At w = 0 the intersection is a wedge: B(R) (pi - alpha) / (2 pi).
double iota_zero_axis(double R, double w, double alpha,
                      const Tolerances& tol = {});

// The unique pair (alpha1, alpha2) in [-pi/2, pi/2]^2 with
// alpha1 + alpha2 = alpha and tanh w1 cos alpha2 = tanh w2 cos alpha1,
// for 0 < w1 <= w2 in the genuinely overlapping case.  Solved through the
// monotone single-variable form (tanh w2)(sin alpha tan x + cos alpha) =
// tanh w1 for x = alpha2.
struct SplitAngles {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
};
SplitAngles split_angles(double w1, double w2, double alpha,
                         const Tolerances& tol = {});

// Volume of the intersection of two caps of the ball of radius R, at plane
// distances w1 and w2, whose directions make the spherical angle alpha.
// Symmetric in (w1, w2).  With Psi_i = cap_angle_theta(w_i, R) and
// w1 <= w2: alpha <= Psi1 - Psi2 gives kappa(R, w2) (the smaller cap is
// swallowed); alpha > Psi1 + Psi2 gives 0 (disjoint caps); in between the
// plane pair splits along a common perpendicular direction and
//   iota = iota(R, w1, 0, alpha1 + pi/2) + iota(R, w2, 0, alpha2 + pi/2).
double iota_general(double R, double w1, double w2, double alpha,
                    const Tolerances& tol = {});

// Volume of the union of two caps:
//   sigma(R, w, wp, alpha) = kappa(R, w) + kappa(R, wp)
//                            - iota_general(R, w, wp, alpha).
// Decreasing in wp and increasing in alpha.
double sigma_union(double R, double w, double wp, double alpha,
                   const Tolerances& tol = {});

// Radius of the intersection circle of two Euclidean spheres of radii r1,
// r2 with centers D apart, and the distance from the first center to the
// circle's center.  Requires |r1 - r2| < D < r1 + r2.
struct CircleIntersection {
  double radius = 0.0;
  double center_offset = 0.0;
};
CircleIntersection circle_intersection(double r1, double r2, double D);

}  // namespace hypvol::caps

#endif
