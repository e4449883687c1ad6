#include "hypvol/caps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "hypvol/errors.hpp"
#include "hypvol/hyptrig.hpp"

namespace hypvol::caps {

namespace {

constexpr double kPi = 3.14159265358979323846;

// sqrt of a radicand that is nonnegative in exact arithmetic but may dip
// below zero by roundoff near a boundary curve.
double guarded_sqrt(double x, double scale, const Tolerances& tol,
                    const char* what) {
  if (x < 0.0) {
    if (x < -tol.domain_clamp * scale) {
      throw consistency_error(std::string(what) +
                              ": radicand below tolerance, " +
                              std::to_string(x));
    }
    return 0.0;
  }
  return std::sqrt(x);
}

}  // namespace

double apex_arc_distance(double theta) {
  if (!(theta >= 0.0) || !(theta < kPi / 2.0)) {
    throw domain_error("apex_arc_distance: angle must lie in [0, pi/2)");
  }
  return std::log(1.0 / std::cos(theta) + std::tan(theta));
}

double kappa(double R, double w) {
  if (!(R > 0.0)) throw domain_error("kappa: radius must be > 0");
  if (!(w >= 0.0)) throw domain_error("kappa: plane distance must be >= 0");
  if (w >= R) return 0.0;
  if (w == 0.0) return 0.5 * hyptrig::ball_volume(R);
  double chR = std::cosh(R);
  double chw = std::cosh(w);
  double eps2 = std::exp(-2.0 * w) * (1.0 - chw * chw / (chR * chR));
  double shR = std::sinh(R);
  double L = chR - std::sqrt(shR * shR - eps2);
  // e^{-2w} - eps^2 = e^{-2w} cosh^2 w / cosh^2 R exactly.
  double log_tail = -2.0 * w + 2.0 * (std::log(chw) - std::log(chR));
  return kPi * (std::exp(R) * chR - chR / L - std::log(L) - R +
                0.5 * log_tail + w);
}

PerpCapGeometry perp_cap_geometry(double R, double w, double alpha,
                                  const Tolerances& tol) {
  if (!(R > 0.0) || !(w > 0.0) || !(w < R)) {
    throw domain_error("perp_cap_geometry: need 0 < w < R");
  }
  if (!(alpha > kPi / 2.0) || !(alpha < kPi)) {
    throw domain_error("perp_cap_geometry: angle must lie in (pi/2, pi)");
  }
  double phi = alpha - kPi / 2.0;
  PerpCapGeometry g;
  g.v = 1.0 / (std::sinh(w) + std::cosh(w) * std::cos(phi));
  g.c = g.v * std::sin(phi) * std::cosh(w);
  double chR = std::cosh(R);
  double den = g.c * g.c + chR * chR;
  double half_chord = (g.v * g.v + g.c * g.c + 1.0) / (2.0 * den);
  double disc = g.v * g.v - half_chord * half_chord * den;
  g.mu = guarded_sqrt(disc, g.v * g.v, tol, "perp_cap_geometry (mu)");
  g.rho = chR / std::sqrt(den);
  g.m = g.c * (1.0 - half_chord);
  double span2 = g.rho * g.rho * g.mu * g.mu - g.m * g.m;
  if (g.m > g.rho * g.mu) {
    g.theta0 = 0.0;
  } else {
    g.theta0 = std::atan2(
        guarded_sqrt(span2, g.rho * g.rho * g.mu * g.mu + g.m * g.m, tol,
                     "perp_cap_geometry (theta0)"),
        g.m * g.rho);
  }
  return g;
}

namespace {

// Antiderivative in t = r - m cos(theta) of r / L(r, theta)^2, where
// L = A - W, W = sqrt(b2 - t^2), A = cosh R, b2 = sinh^2 R - m^2 sin^2 theta,
// beta2 = 1 + m^2 sin^2 theta (so beta2 + b2 = A^2 and A^2 - W^2 =
// beta2 + t^2), and k = m cos(theta):
//   -A^2/(beta2+t^2) - (1/2) log(beta2+t^2)
//   + k [A^2 t / (beta2 (beta2+t^2)) + (b2/beta^3) arctan(t/beta)]
//   - A W/(beta2+t^2) + (1/2) log((A+W)/(A-W))
//   + A k t W/(beta2 (beta2+t^2)) + (k b2/beta^3) arctan(A t/(beta W)).
double lower_antiderivative(double t, double A, double b2, double beta2,
                            double k, const Tolerances& tol) {
  double q = beta2 + t * t;
  double beta = std::sqrt(beta2);
  double W = guarded_sqrt(b2 - t * t, b2, tol, "iota_perp (ball radicand)");
  double value = -A * A / q - 0.5 * std::log(q) - A * W / q +
                 0.5 * std::log((A + W) / (A - W));
  if (k != 0.0) {
    double cube = beta2 * beta;
    value += k * (A * A * t / (beta2 * q) + (b2 / cube) * std::atan(t / beta));
    value += A * k * t * W / (beta2 * q) +
             (k * b2 / cube) * std::atan2(A * t, beta * W);
  }
  return value;
}

// Antiderivative in s = r + k2 of r / U(r, theta)^2, where U = sqrt(a2 - s^2)
// and k2 = (c - m) cos(theta):
//   -log U - (k2/(2a)) log((a+s)/(a-s)),
// expanded in log(a+s), log(a-s) so the two pieces share the clamping.
double upper_antiderivative(double s, double a, double k2,
                            const Tolerances& tol) {
  double plus = a + s;
  double minus = a - s;
  if (minus <= 0.0) {
    if (minus < -tol.domain_clamp * a) {
      throw consistency_error("iota_perp: plane radicand below tolerance");
    }
    minus = std::numeric_limits<double>::min();
  }
  double lp = std::log(plus);
  double lm = std::log(minus);
  return -0.5 * (lp + lm) - (k2 / (2.0 * a)) * (lp - lm);
}

}  // namespace

double iota_perp(double R, double w, double alpha, const Tolerances& tol) {
  PerpCapGeometry g = perp_cap_geometry(R, w, alpha, tol);
  if (g.m > g.rho * g.mu) return 0.0;
  double A = std::cosh(R);
  double shR2 = std::sinh(R) * std::sinh(R);
  auto inner = [&](double theta) {
    double st = std::sin(theta);
    double ct = std::cos(theta);
    double b2 = shR2 - g.m * g.m * st * st;
    double beta2 = 1.0 + g.m * g.m * st * st;
    double k = g.m * ct;
    double k2 = (g.c - g.m) * ct;
    double cm2 = (g.c - g.m) * (g.c - g.m);
    double a = guarded_sqrt(g.v * g.v - cm2 * st * st, g.v * g.v, tol,
                            "iota_perp (plane axis)");
    double r_lo = (g.m == 0.0) ? 0.0 : g.m / ct;
    double r_hi = g.rho * g.mu / std::sqrt(ct * ct + g.rho * g.rho * st * st);
    if (r_hi <= r_lo) return 0.0;
    double t_lo = r_lo - k;
    double t_hi = r_hi - k;
    double lower = lower_antiderivative(t_hi, A, b2, beta2, k, tol) -
                   lower_antiderivative(t_lo, A, b2, beta2, k, tol);
    double upper = upper_antiderivative(r_hi + k2, a, k2, tol) -
                   upper_antiderivative(r_lo + k2, a, k2, tol);
    return lower - upper;
  };
  if (g.theta0 <= 0.0) return 0.0;
  return numerics::integrate_adaptive(inner, 0.0, g.theta0, tol).value;
}

double iota_zero_axis(double R, double w, double alpha,
                      const Tolerances& tol) {
  if (!(R > 0.0)) throw domain_error("iota_zero_axis: radius must be > 0");
  if (!(w >= 0.0)) {
    throw domain_error("iota_zero_axis: plane distance must be >= 0");
  }
  if (alpha < -tol.domain_clamp || alpha > kPi + tol.domain_clamp) {
    throw domain_error("iota_zero_axis: angle must lie in [0, pi]");
  }
  alpha = std::min(std::max(alpha, 0.0), kPi);
  if (w >= R) return 0.0;
  if (alpha == 0.0) return kappa(R, w);
  if (alpha == kPi) return 0.0;
  if (w == 0.0) {
    return hyptrig::ball_volume(R) * (kPi - alpha) / (2.0 * kPi);
  }
  if (alpha == kPi / 2.0) return 0.5 * kappa(R, w);
  if (alpha > kPi / 2.0) return iota_perp(R, w, alpha, tol);
  return kappa(R, w) - iota_perp(R, w, kPi - alpha, tol);
}

SplitAngles split_angles(double w1, double w2, double alpha,
                         const Tolerances& tol) {
  if (!(w1 > 0.0) || !(w2 >= w1)) {
    throw domain_error("split_angles: need 0 < w1 <= w2");
  }
  if (!(alpha > 0.0) || !(alpha < kPi)) {
    throw domain_error("split_angles: angle must lie in (0, pi)");
  }
  double t1 = std::tanh(w1);
  double t2 = std::tanh(w2);
  double sa = std::sin(alpha);
  double ca = std::cos(alpha);
  auto residual = [&](double x) { return t2 * (sa * std::tan(x) + ca) - t1; };
  double lim = kPi / 2.0 - 1e-9;
  double x;
  try {
    x = numerics::solve_bracketed(residual, -lim, lim, tol);
  } catch (const bracket_error&) {
    throw consistency_error(
        "split_angles: no bracketed root in the validated case");
  }
  SplitAngles out;
  out.alpha2 = x;
  out.alpha1 = alpha - x;
  return out;
}

double iota_general(double R, double w1, double w2, double alpha,
                    const Tolerances& tol) {
  if (!(R > 0.0)) throw domain_error("iota_general: radius must be > 0");
  if (!(w1 >= 0.0) || !(w2 >= 0.0)) {
    throw domain_error("iota_general: plane distances must be >= 0");
  }
  if (alpha < -tol.domain_clamp || alpha > kPi + tol.domain_clamp) {
    throw domain_error("iota_general: angle must lie in [0, pi]");
  }
  alpha = std::min(std::max(alpha, 0.0), kPi);
  if (w1 > w2) std::swap(w1, w2);
  if (w2 >= R) return 0.0;
  if (w1 == 0.0) return iota_zero_axis(R, w2, alpha, tol);
  double psi1 = hyptrig::cap_angle_theta(w1, R);
  double psi2 = hyptrig::cap_angle_theta(w2, R);
  if (alpha <= psi1 - psi2) return kappa(R, w2);
  if (alpha > psi1 + psi2) return 0.0;
  SplitAngles split = split_angles(w1, w2, alpha, tol);
  return iota_zero_axis(R, w1, split.alpha1 + kPi / 2.0, tol) +
         iota_zero_axis(R, w2, split.alpha2 + kPi / 2.0, tol);
}

double sigma_union(double R, double w, double wp, double alpha,
                   const Tolerances& tol) {
  return kappa(R, w) + kappa(R, wp) - iota_general(R, w, wp, alpha, tol);
}

CircleIntersection circle_intersection(double r1, double r2, double D) {
  if (!(r1 > 0.0) || !(r2 > 0.0) || !(D > 0.0)) {
    throw domain_error("circle_intersection: radii and distance must be > 0");
  }
  if (!(std::abs(r1 - r2) < D) || !(D < r1 + r2)) {
    throw domain_error("circle_intersection: spheres do not meet in a circle");
  }
  CircleIntersection out;
  out.center_offset = (r1 * r1 + D * D - r2 * r2) / (2.0 * D);
  out.radius = std::sqrt(r1 * r1 - out.center_offset * out.center_offset);
  return out;
}

}  // namespace hypvol::caps
