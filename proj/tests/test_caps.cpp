#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <tuple>
#include <utility>

#include "hypvol/caps.hpp"
#include "hypvol/hyptrig.hpp"
#include "oracles.hpp"

namespace {

using namespace hypvol::caps;
using hypvol::domain_error;
using hypvol::hyptrig::ball_volume;
using hypvol::hyptrig::cap_angle_theta;

constexpr double kPi = 3.14159265358979323846;
constexpr std::size_t kMcSamples = 4'000'000;

double mc_gap(double a, double b) { return std::abs(a - b); }
double mc_tol(double a, double b) {
  return 5e-3 * std::max({std::abs(a), std::abs(b), 0.01});
}

TEST_CASE("kappa degenerate and boundary values") {
  CHECK(kappa(1.0, 1.0) == 0.0);
  CHECK(kappa(1.0, 1.5) == 0.0);
  CHECK(kappa(1.0, 0.0) == 0.5 * ball_volume(1.0));
  CHECK(std::abs(kappa(1.0, 1.0 - 1e-9)) < 1e-12);
  CHECK_THROWS_AS(kappa(0.0, 0.5), domain_error);
  CHECK_THROWS_AS(kappa(1.0, -0.1), domain_error);
}

TEST_CASE("kappa weakly decreasing in plane distance") {
  double R = 0.97295507452765665;
  double prev = kappa(R, 0.0);
  for (double w : {0.1, 0.25, 0.4, 0.55, 0.7, 0.85, 0.95}) {
    double value = kappa(R, w);
    CHECK(value < prev);
    CHECK(value > 0.0);
    prev = value;
  }
}

TEST_CASE("kappa agrees with the reduced antiderivative") {
  for (auto [R, w] : {std::pair{0.7, 0.1}, std::pair{0.7, 0.4},
                      std::pair{0.7, 0.65},
                      std::pair{0.97295507452765665, 0.8008329186868668},
                      std::pair{1.4, 0.2}, std::pair{1.4, 1.1}}) {
    double chR = std::cosh(R);
    double expected = kPi * (std::exp(R) * chR -
                             std::exp(w) * chR * chR / std::cosh(w) - R + w);
    CHECK(kappa(R, w) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("kappa against Monte-Carlo counting") {
  double a = kappa(1.0, 0.4);
  double b = oracles::mc_kappa(1.0, 0.4, 8101, kMcSamples);
  CHECK(mc_gap(a, b) <= mc_tol(a, b));

  double c = kappa(0.97295507452765665, 0.8008329186868668);
  double d = oracles::mc_kappa(0.97295507452765665, 0.8008329186868668,
                               8102, kMcSamples);
  CHECK(mc_gap(c, d) <= mc_tol(c, d));
}

TEST_CASE("apex_arc_distance satisfies cosh d = sec theta") {
  CHECK(apex_arc_distance(0.0) == 0.0);
  for (double theta : {0.3, 0.9, 1.4, 1.55}) {
    CHECK(std::cosh(apex_arc_distance(theta)) * std::cos(theta) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(apex_arc_distance(-0.1), domain_error);
  CHECK_THROWS_AS(apex_arc_distance(kPi / 2.0), domain_error);
}

TEST_CASE("perp_cap_geometry invariants") {
  for (auto [R, w, alpha] :
       {std::tuple{1.0, 0.4, 2.0}, std::tuple{1.0, 0.1, 1.7},
        std::tuple{0.97295507452765665, 0.3, 2.2},
        std::tuple{1.4, 1.0, 1.85}}) {
    PerpCapGeometry g = perp_cap_geometry(R, w, alpha);
    CHECK(g.v > 0.0);
    CHECK(g.mu >= 0.0);
    CHECK(g.rho > 0.0);
    CHECK(g.rho < 1.0);
    CHECK(g.theta0 >= 0.0);
    CHECK(g.theta0 <= kPi);
    if (g.theta0 > 0.0 && g.m > 0.0) {
      // at theta0 the chord lower limit meets the ellipse upper limit
      double ct = std::cos(g.theta0);
      double st = std::sin(g.theta0);
      double r_hi = g.rho * g.mu /
                    std::sqrt(ct * ct + g.rho * g.rho * st * st);
      CHECK(g.m / ct == doctest::Approx(r_hi).epsilon(1e-9));
    }
  }

  PerpCapGeometry miss = perp_cap_geometry(1.0, 0.4, 2.8);
  CHECK(miss.m > miss.rho * miss.mu);
  CHECK(miss.theta0 == 0.0);

  CHECK_THROWS_AS(perp_cap_geometry(1.0, 1.2, 2.0), domain_error);
  CHECK_THROWS_AS(perp_cap_geometry(1.0, 0.4, 1.2), domain_error);
  CHECK_THROWS_AS(perp_cap_geometry(1.0, 0.4, kPi), domain_error);
}

TEST_CASE("iota_perp against Monte-Carlo counting") {
  double a = iota_perp(1.0, 0.4, 2.0);
  double b = oracles::mc_iota(1.0, 0.0, 0.4, 2.0, 8103, kMcSamples);
  CHECK(mc_gap(a, b) <= mc_tol(a, b));
  CHECK(iota_perp(1.0, 0.4, 2.8) == 0.0);
}

TEST_CASE("complements identity") {
  for (auto [R, w] : {std::pair{1.0, 0.4},
                      std::pair{0.97295507452765665, 0.35}}) {
    for (double alpha : {1.9, 2.3, 2.9}) {
      double lhs = iota_zero_axis(R, w, alpha) +
                   iota_zero_axis(R, w, kPi - alpha);
      CHECK(std::abs(lhs - kappa(R, w)) < 1e-6);
    }
  }
}

TEST_CASE("iota_zero_axis dispatch table") {
  CHECK(iota_zero_axis(1.0, 0.4, 0.0) == kappa(1.0, 0.4));
  CHECK(iota_zero_axis(1.0, 0.4, kPi) == 0.0);
  CHECK(iota_zero_axis(1.0, 0.4, kPi / 2.0) == 0.5 * kappa(1.0, 0.4));
  CHECK(iota_zero_axis(1.0, 1.7, 1.0) == 0.0);
  CHECK(iota_zero_axis(1.0, 0.0, 1.1) ==
        ball_volume(1.0) * (kPi - 1.1) / (2.0 * kPi));
  CHECK_THROWS_AS(iota_zero_axis(1.0, 0.4, 3.2), domain_error);
  CHECK_THROWS_AS(iota_zero_axis(1.0, 0.4, -0.1), domain_error);
  CHECK_THROWS_AS(iota_zero_axis(1.0, -0.4, 1.0), domain_error);
}

TEST_CASE("iota_zero_axis against Monte-Carlo counting") {
  double a = iota_zero_axis(1.0, 0.4, 0.8);
  double b = oracles::mc_iota(1.0, 0.0, 0.4, 0.8, 8104, kMcSamples);
  CHECK(mc_gap(a, b) <= mc_tol(a, b));

  double wedge = iota_zero_axis(1.0, 0.0, 2.2);
  double wedge_mc = oracles::mc_iota(1.0, 0.0, 0.0, 2.2, 8105, kMcSamples);
  CHECK(mc_gap(wedge, wedge_mc) <= mc_tol(wedge, wedge_mc));
}

TEST_CASE("split_angles structure") {
  SplitAngles sym = split_angles(0.5, 0.5, 1.2);
  CHECK(sym.alpha1 == doctest::Approx(0.6).epsilon(1e-10));
  CHECK(sym.alpha2 == doctest::Approx(0.6).epsilon(1e-10));

  SplitAngles s = split_angles(0.3, 0.5, 1.2);
  CHECK(std::abs(s.alpha1 + s.alpha2 - 1.2) < 1e-12);
  CHECK(std::abs(std::tanh(0.3) * std::cos(s.alpha2) -
                 std::tanh(0.5) * std::cos(s.alpha1)) < 1e-10);
  double closed = std::atan((std::tanh(0.3) / std::tanh(0.5) -
                             std::cos(1.2)) /
                            std::sin(1.2));
  CHECK(s.alpha2 == doctest::Approx(closed).epsilon(1e-10));

  for (auto [w1, w2, alpha] :
       {std::tuple{0.2, 0.6, 0.9}, std::tuple{0.1, 0.8, 1.5},
        std::tuple{0.45, 0.5, 2.3}}) {
    SplitAngles a = split_angles(w1, w2, alpha);
    CHECK(a.alpha2 >= -kPi / 2.0);
    CHECK(a.alpha2 <= kPi / 2.0);
    CHECK(a.alpha1 >= alpha - kPi / 2.0);
    CHECK(a.alpha1 <= kPi / 2.0 + 1e-12);
  }

  CHECK_THROWS_AS(split_angles(0.0, 0.5, 1.2), domain_error);
  CHECK_THROWS_AS(split_angles(0.5, 0.3, 1.2), domain_error);
  CHECK_THROWS_AS(split_angles(0.3, 0.5, 0.0), domain_error);
  CHECK_THROWS_AS(split_angles(0.3, 0.5, kPi), domain_error);
}

TEST_CASE("iota_general dispatch") {
  CHECK(iota_general(1.0, 0.3, 0.5, 0.0) == kappa(1.0, 0.5));
  CHECK(iota_general(1.0, 0.3, 0.5, kPi) == 0.0);
  CHECK(iota_general(1.0, 0.3, 1.2, 0.7) == 0.0);
  CHECK(iota_general(1.0, 0.0, 0.4, 2.0) == iota_zero_axis(1.0, 0.4, 2.0));
  CHECK(iota_general(1.0, 0.4, 0.0, 2.8) == 0.0);

  // nested: alpha below the aperture difference swallows the deeper cap
  double dif = cap_angle_theta(0.3, 1.0) - cap_angle_theta(0.5, 1.0);
  CHECK(iota_general(1.0, 0.3, 0.5, 0.9 * dif) == kappa(1.0, 0.5));

  CHECK(iota_general(1.0, 0.5, 0.3, 1.2) == iota_general(1.0, 0.3, 0.5, 1.2));

  CHECK_THROWS_AS(iota_general(0.0, 0.3, 0.5, 1.2), domain_error);
  CHECK_THROWS_AS(iota_general(1.0, -0.3, 0.5, 1.2), domain_error);
  CHECK_THROWS_AS(iota_general(1.0, 0.3, 0.5, 3.3), domain_error);
}

TEST_CASE("iota_general bounded by both caps") {
  for (double alpha : {0.2, 0.7, 1.2, 1.8, 2.4}) {
    double value = iota_general(1.0, 0.3, 0.5, alpha);
    CHECK(value >= 0.0);
    CHECK(value <= kappa(1.0, 0.3) + 1e-12);
    CHECK(value <= kappa(1.0, 0.5) + 1e-12);
  }
  CHECK(iota_general(1.0, 0.3, 0.5, 1.2) > iota_general(1.0, 0.3, 0.5, 1.8));
}

TEST_CASE("iota_general against Monte-Carlo counting") {
  // both split angles positive: two perpendicular-form pieces
  double a = iota_general(1.0, 0.3, 0.5, 1.2);
  double b = oracles::mc_iota(1.0, 0.3, 0.5, 1.2, 8106, kMcSamples);
  CHECK(mc_gap(a, b) <= mc_tol(a, b));

  // negative second split angle: complement branch inside one piece
  double c = iota_general(1.0, 0.3, 0.5, 0.4);
  double d = oracles::mc_iota(1.0, 0.3, 0.5, 0.4, 8107, kMcSamples);
  CHECK(mc_gap(c, d) <= mc_tol(c, d));
}

TEST_CASE("sigma_union endpoints and monotonicity") {
  CHECK(sigma_union(1.0, 0.3, 0.5, 0.0) ==
        doctest::Approx(kappa(1.0, 0.3)).epsilon(1e-14));
  CHECK(sigma_union(1.0, 0.3, 0.5, kPi) ==
        kappa(1.0, 0.3) + kappa(1.0, 0.5));

  double prev = sigma_union(0.97, 0.3, 0.34, 1.0);
  for (double wp : {0.4, 0.55, 0.7, 0.9}) {
    double value = sigma_union(0.97, 0.3, wp, 1.0);
    CHECK(value <= prev + 1e-12);
    prev = value;
  }
  prev = 0.0;
  for (double alpha : {0.3, 0.9, 1.7, 2.6, kPi}) {
    double value = sigma_union(0.97, 0.3, 0.45, alpha);
    CHECK(value >= prev - 1e-12);
    prev = value;
  }
  CHECK(sigma_union(0.97, 0.3, 0.45, 0.9) < sigma_union(0.97, 0.3, 0.45, 1.7));
}

TEST_CASE("sigma_union against Monte-Carlo counting") {
  double a = sigma_union(1.0, 0.5, 0.7, 1.0);
  double b = oracles::mc_sigma(1.0, 0.5, 0.7, 1.0, 8108, kMcSamples);
  CHECK(mc_gap(a, b) <= mc_tol(a, b));
}

TEST_CASE("circle_intersection") {
  CircleIntersection pyth = circle_intersection(3.0, 4.0, 5.0);
  CHECK(pyth.radius == doctest::Approx(2.4).epsilon(1e-15));
  CHECK(pyth.center_offset == doctest::Approx(1.8).epsilon(1e-15));

  for (double r : {0.4, 1.0, 2.7}) {
    CircleIntersection eq = circle_intersection(r, r, r);
    CHECK(eq.radius == doctest::Approx(r * std::sqrt(3.0) / 2.0)
                           .epsilon(1e-15));
    CHECK(eq.center_offset == doctest::Approx(r / 2.0).epsilon(1e-15));
  }

  CHECK_THROWS_AS(circle_intersection(1.0, 1.0, 2.0), domain_error);
  CHECK_THROWS_AS(circle_intersection(1.0, 3.0, 2.0), domain_error);
  CHECK_THROWS_AS(circle_intersection(0.0, 1.0, 0.5), domain_error);
}

}  // namespace
