#include "hypvol/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace hypvol::numerics {

void Tolerances::validate() const {
  if (!(quad_abs > 0.0) || !(quad_rel > 0.0) || !(root_tol > 0.0) ||
      !(domain_clamp > 0.0)) {
    throw domain_error("Tolerances: all fields must be strictly positive");
  }
}

namespace {

// Gauss(7)/Kronrod(15) nodes and weights on [-1, 1].  Nodes are symmetric;
// only the non-negative half is stored.  xgk[1], xgk[3], ... are the Gauss
// abscissae.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

constexpr int kPanelBudget = 10000;

struct Panel {
  double a, b;
  double value;  // Kronrod estimate
  double err;    // |Kronrod - Gauss|, rescaled

  bool operator<(const Panel& other) const { return err < other.err; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double fc = f(center);
  if (!std::isfinite(fc)) {
    throw domain_error("integrate_adaptive: integrand returned a non-finite value");
  }
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    if (!std::isfinite(f1) || !std::isfinite(f2)) {
      throw domain_error("integrate_adaptive: integrand returned a non-finite value");
    }
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;

  // QUADPACK-style rescaling of the raw difference; sharpens the estimate
  // for smooth integrands without ever understating it by much.
  const double diff = std::abs(kronrod - gauss);
  double err = diff;
  if (diff > 0.0) {
    err = diff * std::min(1.0, std::pow(200.0 * diff / (1.0 + diff), 1.5));
    err = std::max(err, 50.0 * 2.22e-16 * std::abs(kronrod));
    err = std::max(err, diff * 1e-6);
  }
  return Panel{a, b, kronrod, err};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const Tolerances& tol) {
  tol.validate();
  if (!(a <= b)) {
    throw domain_error("integrate_adaptive: requires a <= b");
  }
  if (a == b) return QuadratureResult{0.0, 0.0, 1};

  std::priority_queue<Panel> queue;
  queue.push(evaluate_panel(f, a, b));

  double total_value = queue.top().value;
  double total_err = queue.top().err;
  int panels = 1;

  while (true) {
    const double target =
        std::max(tol.quad_abs, tol.quad_rel * std::abs(total_value));
    if (total_err <= target) break;
    if (panels >= kPanelBudget) {
      throw convergence_error(
          "integrate_adaptive: error " + std::to_string(total_err) +
          " above tolerance after " + std::to_string(panels) + " panels");
    }

    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval no longer splittable in double precision.
      throw convergence_error(
          "integrate_adaptive: interval collapsed before reaching tolerance");
    }
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    queue.push(left);
    queue.push(right);
    ++panels;
  }

  return QuadratureResult{total_value, std::max(total_err, 0.0), panels};
}

double solve_bracketed(const std::function<double(double)>& g, double lo,
                       double hi, const Tolerances& tol) {
  tol.validate();
  if (!(lo <= hi)) {
    throw domain_error("solve_bracketed: requires lo <= hi");
  }
  double flo = g(lo);
  double fhi = g(hi);
  if (std::isnan(flo) || std::isnan(fhi)) {
    throw domain_error("solve_bracketed: g returned NaN at an endpoint");
  }
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw bracket_error("solve_bracketed: g(lo) and g(hi) have the same sign");
  }

  for (int iter = 0; iter < 200 && hi - lo > tol.root_tol; ++iter) {
    double mid = 0.5 * (lo + hi);
    // Secant proposal; used only if it falls well inside the bracket.
    const double denom = fhi - flo;
    if (denom != 0.0) {
      const double sec = lo - flo * (hi - lo) / denom;
      const double margin = 0.01 * (hi - lo);
      if (sec > lo + margin && sec < hi - margin) mid = sec;
    }
    const double fmid = g(mid);
    if (std::isnan(fmid)) {
      throw domain_error("solve_bracketed: g returned NaN inside the bracket");
    }
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

double safe_inverse(InverseKind kind, double x, const Tolerances& tol) {
  tol.validate();
  const double c = tol.domain_clamp;
  switch (kind) {
    case InverseKind::arccosh:
      if (x < 1.0 - c) {
        throw domain_error("safe_inverse(arccosh): argument below 1");
      }
      return std::acosh(std::max(x, 1.0));
    case InverseKind::arctanh:
      if (std::abs(x) > 1.0 + c) {
        throw domain_error("safe_inverse(arctanh): |argument| above 1");
      }
      return std::atanh(std::clamp(x, -1.0, 1.0));
    case InverseKind::arccos:
      if (std::abs(x) > 1.0 + c) {
        throw domain_error("safe_inverse(arccos): |argument| above 1");
      }
      return std::acos(std::clamp(x, -1.0, 1.0));
    case InverseKind::arcsin:
      if (std::abs(x) > 1.0 + c) {
        throw domain_error("safe_inverse(arcsin): |argument| above 1");
      }
      return std::asin(std::clamp(x, -1.0, 1.0));
    case InverseKind::arcsech:
      // arcsech x = arccosh(1/x) on (0, 1].
      if (x > 1.0 + c) {
        throw domain_error("safe_inverse(arcsech): argument above 1");
      }
      if (x <= 0.0) {
        throw domain_error("safe_inverse(arcsech): argument not positive");
      }
      return std::acosh(std::max(1.0 / std::min(x, 1.0), 1.0));
    case InverseKind::arcsec:
      // arcsec x = arccos(1/x) for |x| >= 1.
      if (std::abs(x) < 1.0 - c) {
        throw domain_error("safe_inverse(arcsec): |argument| below 1");
      }
      if (std::abs(x) < 1.0) x = std::copysign(1.0, x);
      return std::acos(1.0 / x);
  }
  throw domain_error("safe_inverse: unknown kind");
}

}  // namespace hypvol::numerics
