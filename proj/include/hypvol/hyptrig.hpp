#ifndef HYPVOL_HYPTRIG_HPP
#define HYPVOL_HYPTRIG_HPP

#include "hypvol/numerics.hpp"

namespace hypvol::hyptrig {

using numerics::Tolerances;

// Loxodromic isometry data: translation length l > 0 and twist angle theta.
struct LoxodromicParams {
  double length = 0.0;
  double twist = 0.0;
};

// Regular-tetrahedron packing data at sphere radius r: dihedral angle beta,
// corner-tetrahedron volume tau, density bound d, and the barycenter-to-edge
// and barycenter-to-vertex distances h2 < h3 of the tetrahedron of side 2r.
struct BoroczkyProfile {
  double radius = 0.0;
  double beta = 0.0;
  double tau = 0.0;
  double density = 0.0;
  double h2 = 0.0;
  double h3 = 0.0;
};

// Volume of a hyperbolic ball: B(r) = pi (sinh 2r - 2r).
double ball_volume(double r);

// Distance from a point to the axis of a loxodromic with length l and twist
// theta, given that the point is displaced by D:
//   omega = arcsinh sqrt((cosh D - cosh l)/(cosh l - cos theta)).
// Defined for 0 < l <= D; increasing in D.
double omega(double l, double theta, double D);

// Radius of the tube around the axis inside which some power of the
// loxodromic displaces by less than lambda:
//   max over 1 <= n <= floor(lambda / l) of omega(n l, n theta, lambda).
// Requires lox.length < lambda (otherwise the tube is empty).
double cylinder_radius(double lambda, const LoxodromicParams& lox);

// Minimum displacement of the n-th power of an isometry of translation
// length >= delta whose own displacement at the point is D:
//   Phi_n = arccosh(cosh n delta
//                   + (cosh n delta - 1)(cosh D - cosh delta)/(cosh delta + 1)).
// Satisfies n delta <= Phi_n <= n D and is increasing in delta and D.
// Evaluated through the cancellation-free identity
//   cosh Phi_n - 1 = 2 sinh^2(n delta / 2) (cosh D + 1)/(cosh delta + 1).
double phi_n(int n, double delta, double D);

// Base angle of the isosceles hyperbolic triangle with legs x and base y:
//   Psi = arccos(coth x (coth y - csch y)) = arccos(coth x tanh(y/2)),
// for 0 < y <= 2x, with values in [0, pi/2].  Psi(x, 2x) = 0.
double psi(double x, double y);

// Angular radius of a cap cut at plane distance w from the center of a ball
// of radius R: Theta = arccos(tanh w / tanh R) in (0, pi/2), for 0 < w < R.
double cap_angle_theta(double w, double R);

// Distance between two points on opposite sides of a line, at distances R1
// and R2 from it, whose projections onto the line are h apart:
//   Sigma = arccosh(sinh R1 sinh R2 + cosh R1 cosh R2 cosh h).
double sigma_dist(double h, double R1, double R2);

// Admissible parameter region: 1/(1+e^D) + 1/(1+e^lambda) < 1/2.
bool in_X(double D, double lambda);

// rho_k(D, lambda) = (1/2) log((k-2)/(1/2 - 1/(1+e^D) - 1/(1+e^lambda)) - 1)
// for integer k > 2 and (D, lambda) in X.  Decreasing in both arguments.
double rho_k(int k, double D, double lambda);

// rho(l) = (1/2) log((e^l + 3)/(e^l - 1)) for l > 0; strictly decreasing,
// and (l, 2 rho(l)) lies exactly on the boundary of X:
//   1/(1+e^l) + 1/(1+e^{2 rho(l)}) = 1/2.
double rho_short(double l);

// Barycenter-to-cell distances of the regular hyperbolic tetrahedron of side
// 2R.  n = 2 gives the edge distance, n = 3 the vertex distance:
//   tanh h2 = 2 sinh^2 R / sqrt(cosh^2 2R - cosh^2 R),
//   tanh h3 = 2 sinh^2 R / sqrt(cosh^2 2R - cosh^2 h2).
double h_n(int n, double R);

// Full packing profile at radius r.  beta = arcsec(sech 2r + 2);
// tau = 3 * integral of arcsech(sec t - 2) over [beta, arcsec 3];
// d = (3 beta - pi)(sinh 2r - 2r)/tau.  The quadrature runs at tol.
BoroczkyProfile boroczky_profile(double r, const Tolerances& tol = {});

// Improved ball-neighborhood volume bound when a point at distance rho >
// h3(R) exists.  With
//   phi1 = arcsin(sqrt(cosh^2 rho - cosh^2 R)/(sinh rho cosh R)),
//   phi2 = phi1 at rho = h3(R),  phi = phi1 - phi2,
//   v_bor = (1-cos phi)/2 * B(h3(R)) + (1+cos phi)/2 * B(R)/d(R).
// Increasing in rho; always >= B(R)/d(R) and >= B(R).
double v_bor(double R, double rho, const Tolerances& tol = {});

// Same, with the profile for R already computed (the sweeps evaluate v_bor
// thousands of times at a fixed R).
double v_bor(const BoroczkyProfile& profile, double rho);

}  // namespace hypvol::hyptrig

#endif
