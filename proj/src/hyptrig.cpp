#include "hypvol/hyptrig.hpp"

#include <cmath>
#include <string>

#include "hypvol/errors.hpp"

namespace hypvol::hyptrig {

namespace {

constexpr double kPi = 3.14159265358979323846;

using numerics::InverseKind;
using numerics::safe_inverse;

}  // namespace

double ball_volume(double r) {
  if (!(r >= 0.0)) {
    throw domain_error("ball_volume: radius must be >= 0, got " +
                       std::to_string(r));
  }
  return kPi * (std::sinh(2.0 * r) - 2.0 * r);
}

double omega(double l, double theta, double D) {
  if (!(l > 0.0)) {
    throw domain_error("omega: translation length must be > 0");
  }
  if (!(D >= l - Tolerances{}.domain_clamp)) {
    throw domain_error("omega: displacement " + std::to_string(D) +
                       " below translation length " + std::to_string(l));
  }
  double num = std::cosh(D) - std::cosh(l);
  if (num < 0.0) num = 0.0;
  double den = std::cosh(l) - std::cos(theta);
  return std::asinh(std::sqrt(num / den));
}

double cylinder_radius(double lambda, const LoxodromicParams& lox) {
  double l = lox.length;
  if (!(l > 0.0)) {
    throw domain_error("cylinder_radius: translation length must be > 0");
  }
  // floor(lambda / l) with a relative guard so lambda = k l lands on k.
  double q = lambda / l;
  int nmax = static_cast<int>(std::floor(q + 1e-12 * std::max(1.0, q)));
  if (nmax < 1) {
    throw domain_error("cylinder_radius: no power displaces by less than " +
                       std::to_string(lambda));
  }
  double best = 0.0;
  for (int n = 1; n <= nmax; ++n) {
    double nl = n * l;
    if (nl > lambda) nl = lambda;
    best = std::max(best, omega(nl, n * lox.twist, lambda));
  }
  return best;
}

double phi_n(int n, double delta, double D) {
  if (n < 1) throw domain_error("phi_n: n must be >= 1");
  if (!(delta > 0.0)) throw domain_error("phi_n: delta must be > 0");
  if (!(D >= delta)) {
    throw domain_error("phi_n: displacement " + std::to_string(D) +
                       " below lower bound " + std::to_string(delta));
  }
  // cosh Phi - 1 = 2 sinh^2(n delta/2) (cosh D + 1)/(cosh delta + 1), then
  // Phi = log1p(s + sqrt(s (s + 2))) with s = cosh Phi - 1.
  double sh = std::sinh(0.5 * n * delta);
  double s = 2.0 * sh * sh * (std::cosh(D) + 1.0) / (std::cosh(delta) + 1.0);
  return std::log1p(s + std::sqrt(s * (s + 2.0)));
}

double psi(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw domain_error("psi: arguments must be > 0");
  }
  if (!(y <= 2.0 * x * (1.0 + 1e-15) + 1e-300)) {
    throw domain_error("psi: base " + std::to_string(y) +
                       " exceeds twice the leg " + std::to_string(x));
  }
  // coth y - csch y = tanh(y/2), which is exact and avoids the y -> 0
  // cancellation between the two cotangent terms.
  return safe_inverse(InverseKind::arccos,
                      std::tanh(0.5 * y) / std::tanh(x));
}

double cap_angle_theta(double w, double R) {
  if (!(w > 0.0) || !(w < R)) {
    throw domain_error("cap_angle_theta: need 0 < w < R, got w = " +
                       std::to_string(w) + ", R = " + std::to_string(R));
  }
  return std::acos(std::tanh(w) / std::tanh(R));
}

double sigma_dist(double h, double R1, double R2) {
  if (!(h >= 0.0) || !(R1 >= 0.0) || !(R2 >= 0.0)) {
    throw domain_error("sigma_dist: arguments must be >= 0");
  }
  double c = std::sinh(R1) * std::sinh(R2) +
             std::cosh(R1) * std::cosh(R2) * std::cosh(h);
  return safe_inverse(InverseKind::arccosh, c);
}

namespace {

// 1/2 - 1/(1+e^D) - 1/(1+e^lambda); positive exactly on X.
double slack(double D, double lambda) {
  return 0.5 - 1.0 / (1.0 + std::exp(D)) - 1.0 / (1.0 + std::exp(lambda));
}

}  // namespace

bool in_X(double D, double lambda) { return slack(D, lambda) > 0.0; }

double rho_k(int k, double D, double lambda) {
  if (k <= 2) throw domain_error("rho_k: k must be > 2");
  double s = slack(D, lambda);
  if (!(s > 0.0)) {
    throw domain_error("rho_k: (D, lambda) = (" + std::to_string(D) + ", " +
                       std::to_string(lambda) + ") outside X");
  }
  double arg = (k - 2) / s - 1.0;
  if (!(arg > 0.0)) {
    throw domain_error("rho_k: argument of log not positive");
  }
  return 0.5 * std::log(arg);
}

double rho_short(double l) {
  if (!(l > 0.0)) throw domain_error("rho_short: length must be > 0");
  return 0.5 * std::log((std::exp(l) + 3.0) / std::expm1(l));
}

double h_n(int n, double R) {
  if (!(R > 0.0)) throw domain_error("h_n: radius must be > 0");
  if (n != 2 && n != 3) throw domain_error("h_n: n must be 2 or 3");
  double c2R = std::cosh(2.0 * R);
  double cR = std::cosh(R);
  double num = 2.0 * std::sinh(R) * std::sinh(R);  // = cosh 2R - 1
  double th2 = num / std::sqrt(c2R * c2R - cR * cR);
  double h2 = safe_inverse(InverseKind::arctanh, th2);
  if (n == 2) return h2;
  double ch2 = std::cosh(h2);
  double th3 = num / std::sqrt(c2R * c2R - ch2 * ch2);
  return safe_inverse(InverseKind::arctanh, th3);
}

BoroczkyProfile boroczky_profile(double r, const Tolerances& tol) {
  if (!(r > 0.0)) throw domain_error("boroczky_profile: radius must be > 0");
  BoroczkyProfile p;
  p.radius = r;
  p.beta = safe_inverse(InverseKind::arcsec, 1.0 / std::cosh(2.0 * r) + 2.0,
                        tol);
  double upper = safe_inverse(InverseKind::arcsec, 3.0, tol);
  // sec t - 2 decreases to 1 at t = arcsec 3, where arcsech vanishes; the
  // integrand is continuous on the closed interval but its derivative blows
  // up at the right endpoint, which the adaptive rule absorbs.
  auto integrand = [&tol](double t) {
    double a = 1.0 / std::cos(t) - 2.0;
    return safe_inverse(InverseKind::arcsech, std::min(a, 1.0), tol);
  };
  p.tau = 3.0 * numerics::integrate_adaptive(integrand, p.beta, upper, tol)
                    .value;
  p.density = (3.0 * p.beta - kPi) * (std::sinh(2.0 * r) - 2.0 * r) / p.tau;
  p.h2 = h_n(2, r);
  p.h3 = h_n(3, r);
  return p;
}

double v_bor(const BoroczkyProfile& profile, double rho) {
  double R = profile.radius;
  double h3 = profile.h3;
  if (!(rho > h3)) {
    throw domain_error("v_bor: distance " + std::to_string(rho) +
                       " must exceed h3(R) = " + std::to_string(h3));
  }
  auto phi1 = [R](double t) {
    double cR = std::cosh(R);
    double ct = std::cosh(t);
    double num = ct * ct - cR * cR;
    if (num < 0.0) num = 0.0;
    double arg = std::sqrt(num) / (std::sinh(t) * cR);
    return safe_inverse(InverseKind::arcsin, std::min(arg, 1.0));
  };
  double phi = phi1(rho) - phi1(h3);
  double c = std::cos(phi);
  double bh3 = ball_volume(h3);
  double bR_over_d = ball_volume(R) / profile.density;
  return 0.5 * (1.0 - c) * bh3 + 0.5 * (1.0 + c) * bR_over_d;
}

double v_bor(double R, double rho, const Tolerances& tol) {
  return v_bor(boroczky_profile(R, tol), rho);
}

}  // namespace hypvol::hyptrig
