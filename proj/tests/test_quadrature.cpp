#include <doctest.h>

#include <cmath>

#include "minrep/geometry.hpp"
#include "minrep/quadrature.hpp"

using namespace minrep;
using namespace minrep::quadrature;

TEST_CASE("interval and half-line integrals") {
  auto one = integrate_half_line([](double t) { return std::exp(-t); }, 1.0);
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(one.error_estimate >= 0);

  auto s = integrate_interval([](double x) { return std::sin(x); }, 0.0, M_PI / 2);
  CHECK(s.value == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(s.evaluations > 0);

  IntegrateOptions starved;
  starved.tol = 1e-15;
  starved.max_panels = 2;
  CHECK_THROWS_AS(
      integrate_interval([](double x) { return 1.0 / std::sqrt(std::abs(x) + 1e-12); }, 0.0, 1.0,
                         starved),
      Error);
}

TEST_CASE("sphere product volume through the chart weight") {
  // vol(S^1 x S^1) via the angular chart of the (1,1|1,1) split: sixteen
  // sign patches of [0,pi/2]^2 with unit weight
  SignatureSplit split = make_split({2, 2}, 1, 1, 1, 1);
  auto inner = [&](double theta) {
    return integrate_interval(
               [&](double phi) {
                 geometry::AngularChart c;
                 c.split = split;
                 c.theta = theta;
                 c.phi = phi;
                 c.omega_p = {1.0};
                 c.omega_pp = {1.0};
                 c.eta_p = {1.0};
                 c.eta_pp = {1.0};
                 return geometry::angular_volume_weight(c);
               },
               0.0, M_PI / 2)
        .value;
  };
  double vol = 16.0 * integrate_interval(inner, 0.0, M_PI / 2).value;
  CHECK(vol == doctest::Approx(4 * M_PI * M_PI).epsilon(1e-10));
}

TEST_CASE("sphere rules integrate volumes and kill pure harmonics") {
  for (int q = 1; q <= 5; ++q) {
    auto rule = SphereRule::create(q, 20);
    double vol = rule.integrate([](const std::vector<double>&) { return 1.0; });
    double expected = q == 1 ? 2.0 : 2.0 * std::pow(M_PI, q / 2.0) / std::tgamma(q / 2.0);
    CHECK(vol == doctest::Approx(expected).epsilon(1e-12));
  }
  // degree-2 harmonic x0^2 - x1^2 integrates to zero
  auto rule = SphereRule::create(4, 20);
  double ip = rule.integrate(
      [](const std::vector<double>& x) { return x[0] * x[0] - x[1] * x[1]; });
  CHECK(std::abs(ip) < 1e-12);
}
