#include "hypvol/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hypvol/caps.hpp"
#include "hypvol/errors.hpp"
#include "hypvol/hyptrig.hpp"

namespace hypvol::bounds {

namespace {

using hyptrig::ball_volume;

Constants make_constants() {
  Constants c;
  c.delta0 = 0.58;
  c.lambda0 = std::log(7.0);
  c.mu0 = 1.119;
  c.h = hyptrig::h_n(3, c.mu0 / 2.0);
  c.vol_threshold = 3.44;
  if (!(3.0 * c.delta0 < c.lambda0) || !(c.lambda0 < 4.0 * c.delta0)) {
    throw consistency_error("constants: lambda0 must lie in (3 delta0, 4 delta0)");
  }
  return c;
}

const hyptrig::BoroczkyProfile& mu0_profile() {
  static const hyptrig::BoroczkyProfile profile =
      hyptrig::boroczky_profile(constants().mu0 / 2.0);
  return profile;
}

}  // namespace

const Constants& constants() {
  static const Constants c = make_constants();
  return c;
}

bool useful(const HalfOpenInterval& interval) {
  const Constants& c = constants();
  if (!(interval.lo < interval.hi)) return false;
  if (interval.lo < c.delta0 || interval.hi > c.lambda0) return false;
  return !(interval.lo < 0.7 && 0.7 < interval.hi);
}

double t_n(int n, double D) {
  const Constants& c = constants();
  if (!(D >= c.delta0)) {
    throw domain_error("t_n: displacement " + std::to_string(D) +
                       " below delta0");
  }
  return hyptrig::phi_n(n, c.delta0, D);
}

bool grand_duke_holds(double D, double T3, double lambda) {
  if (!(D > 0.0) || !(D < T3) || !(T3 < lambda)) {
    throw domain_error("grand_duke_holds: need 0 < D < T3 < lambda");
  }
  double lhs = std::cos(hyptrig::cap_angle_theta(D / 2.0, lambda / 2.0) -
                        hyptrig::cap_angle_theta(T3 / 2.0, lambda / 2.0));
  double rhs = (std::cosh(D) * std::cosh(T3) - std::cosh(2.0 * D)) /
               (std::sinh(D) * std::sinh(T3));
  return lhs < rhs;
}

double delta_ab(double a, double b) {
  const Constants& c = constants();
  if (!(a >= c.delta0) || !(a < b) || !(b <= 0.7)) {
    throw domain_error("delta_ab: need delta0 <= a < b <= 0.7");
  }
  double half_lambda = c.lambda0 / 2.0;
  auto theta = [half_lambda](double x) {
    return hyptrig::cap_angle_theta(x, half_lambda);
  };
  double phi_a = t_n(3, a);
  double phi_b = t_n(3, b);
  double lhs = std::cos(theta(b / 2.0) - theta(phi_a / 2.0));
  double rhs = 1.0 / (std::tanh(b) * std::tanh(phi_b)) -
               std::cosh(2.0 * b) / (std::sinh(a) * std::sinh(phi_a));
  return lhs - rhs;
}

double v_near_nought(double D, const Tolerances& tol) {
  const Constants& c = constants();
  if (!(D >= c.delta0)) {
    throw domain_error("v_near_nought: displacement below delta0");
  }
  double t2 = t_n(2, D);
  double half_lambda = c.lambda0 / 2.0;
  return ball_volume(half_lambda) -
         2.0 * caps::sigma_union(half_lambda, D / 2.0, t2 / 2.0,
                                 hyptrig::psi(D, t2), tol);
}

double v_near(double D, const Tolerances& tol) {
  const Constants& c = constants();
  double base = v_near_nought(D, tol);
  if (D < 0.7) return base;
  return base - 2.0 * caps::kappa(c.lambda0 / 2.0, t_n(3, D) / 2.0);
}

double z_gap(double D, double lambda) {
  return hyptrig::rho_k(4, D, lambda) - lambda / 2.0;
}

namespace {

// The Z > h case of v_far, with Z possibly infinite (the y = 0 limit of the
// starred forms).
double v_far_distant(double Z, double lambda) {
  const Constants& c = constants();
  double ball_arg = std::min(c.mu0 / 2.0, (Z - c.h) / 2.0);
  return hyptrig::v_bor(mu0_profile(), c.h + lambda / 2.0) +
         ball_volume(ball_arg);
}

}  // namespace

double v_far(double D, double lambda) {
  const Constants& c = constants();
  double Z = z_gap(D, lambda);
  if (Z <= 0.0) return 0.0;
  if (Z <= c.h) return ball_volume(std::min(c.mu0 / 2.0, Z));
  return v_far_distant(Z, lambda);
}

double m_near(const HalfOpenInterval& interval, Mode mode,
              const Tolerances& tol) {
  const Constants& c = constants();
  if (!useful(interval)) {
    throw domain_error("m_near: interval [" + std::to_string(interval.lo) +
                       ", " + std::to_string(interval.hi) +
                       ") is not a useful interval");
  }
  double a = interval.lo;
  double b = interval.hi;
  double half_lambda = c.lambda0 / 2.0;
  double phi2 = hyptrig::phi_n(2, c.delta0, a);
  double value = ball_volume(half_lambda) -
                 2.0 * caps::sigma_union(half_lambda, a / 2.0, phi2 / 2.0,
                                         hyptrig::psi(b, phi2), tol);
  if (a >= 0.7) {
    double coef = (mode == Mode::sound) ? 2.0 : 1.0;
    double phi3 = hyptrig::phi_n(3, c.delta0, a);
    value -= coef * caps::kappa(half_lambda, phi3 / 2.0);
  }
  return value;
}

double v_n(double l, double lambda) {
  if (!(l > 0.0) || !(lambda > 0.0)) {
    throw domain_error("v_n: arguments must be > 0");
  }
  return ball_volume(lambda / 2.0) -
         2.0 * caps::kappa(lambda / 2.0, l / 2.0);
}

double w_total(double l, double lambda) {
  return v_far(l, lambda) + v_n(l, lambda);
}

double w_star(double l, double y) {
  if (!(y >= 0.0)) throw domain_error("w_star: offset must be >= 0");
  double lambda = 2.0 * hyptrig::rho_short(l) + y;
  if (y == 0.0) {
    // On the boundary of X the fourth point escapes to infinity: Z -> +inf.
    return v_far_distant(std::numeric_limits<double>::infinity(), lambda) +
           v_n(l, lambda);
  }
  return w_total(l, lambda);
}

double chi(double l, double y) {
  if (!(y >= 0.0)) throw domain_error("chi: offset must be >= 0");
  if (y == 0.0) return std::numeric_limits<double>::infinity();
  double lambda = 2.0 * hyptrig::rho_short(l) + y;
  return z_gap(l, lambda) - constants().h;
}

RectBounds rect_bounds(const ParamRectangle& rect, double chi_threshold) {
  const Constants& c = constants();
  if (!(rect.l_lo > 0.0) || !(rect.l_lo < rect.l_hi) ||
      !(rect.y_lo >= 0.0) || !(rect.y_lo <= rect.y_hi)) {
    throw domain_error("rect_bounds: malformed rectangle");
  }
  double rho_lo = hyptrig::rho_short(rect.l_lo);
  double rho_hi = hyptrig::rho_short(rect.l_hi);
  RectBounds out;
  out.chi_s = hyptrig::rho_k(4, rect.l_hi, 2.0 * rho_lo + rect.y_hi) -
              (c.h + (2.0 * rho_lo + rect.y_hi) / 2.0);
  out.v_minus =
      ball_volume(std::max(0.0, std::min(c.mu0 / 2.0, out.chi_s + c.h)));
  if (out.chi_s > 0.0) {
    out.v_plus =
        hyptrig::v_bor(mu0_profile(), c.h + (2.0 * rho_hi + rect.y_lo) / 2.0) +
        ball_volume(std::min(c.mu0 / 2.0, out.chi_s / 2.0));
  } else {
    out.v_plus = std::numeric_limits<double>::quiet_NaN();
  }
  out.v_n_s = v_n(rect.l_hi, 2.0 * rho_hi + rect.y_lo);
  out.used_plus = out.chi_s > chi_threshold;
  out.w_s = out.v_n_s + (out.used_plus ? out.v_plus : out.v_minus);
  return out;
}

}  // namespace hypvol::bounds
