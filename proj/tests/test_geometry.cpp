#include <doctest.h>

#include <cmath>
#include <random>

#include "minrep/geometry.hpp"

using namespace minrep;
using namespace minrep::geometry;

namespace {

Vec unit_axis(int dim, int k = 0) {
  Vec v(dim, 0.0);
  v[k] = 1.0;
  return v;
}

std::vector<double> random_unit(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  std::vector<double> v(dim);
  double n2 = 0;
  for (auto& c : v) {
    c = g(rng);
    n2 += c * c;
  }
  for (auto& c : v) c /= std::sqrt(n2);
  return v;
}

ProductSpherePoint random_sphere_point(std::mt19937_64& rng, const SignatureSplit& split) {
  auto parent = split.parent();
  return make_product_sphere_point(random_unit(rng, parent.p), random_unit(rng, parent.q), split);
}

HyperboloidPoint random_hyp(std::mt19937_64& rng, Signature sig, double t_max = 1.5) {
  std::uniform_real_distribution<double> ut(0.0, t_max);
  double t = ut(rng);
  Vec x = random_unit(rng, sig.p);
  for (auto& c : x) c *= std::cosh(t);
  Vec y;
  if (sig.q > 0) {
    y = random_unit(rng, sig.q);
    for (auto& c : y) c *= std::sinh(t);
  }
  return HyperboloidPoint{std::move(x), std::move(y), sig};
}

}  // namespace

TEST_CASE("region classification") {
  SignatureSplit split = make_split({2, 2}, 1, 1, 1, 1);
  auto plus = make_product_sphere_point({1, 0}, {0, 1}, split);
  CHECK(m_region(plus) == MRegion::Plus);
  double r = 1.0 / std::sqrt(2.0);
  auto boundary = make_product_sphere_point({r, r}, {r, r}, split);
  CHECK(m_region(boundary) == MRegion::Boundary);
  auto minus = make_product_sphere_point({0, 1}, {1, 0}, split);
  CHECK(m_region(minus) == MRegion::Minus);
}

TEST_CASE("emptiness predicates for all splits up to dimension 6") {
  std::mt19937_64 rng(11u);
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= 6; ++q)
      for (int p1 = 0; p1 <= p; ++p1)
        for (int q1 = 0; q1 <= q; ++q1) {
          SignatureSplit split = make_split({p, q}, p1, q1, p - p1, q - q1);
          CHECK(m_plus_empty(split) == (split.p1 * split.q2 == 0));
          CHECK(m_minus_empty(split) == (split.p2 * split.q1 == 0));
          bool saw_plus = false, saw_minus = false;
          for (int i = 0; i < 60; ++i) {
            auto pt = random_sphere_point(rng, split);
            auto r = m_region(pt);
            saw_plus |= (r == MRegion::Plus);
            saw_minus |= (r == MRegion::Minus);
          }
          if (m_plus_empty(split)) CHECK(!saw_plus);
          if (m_minus_empty(split)) CHECK(!saw_minus);
          if (!m_plus_empty(split)) {
            // an explicit point of M+: u concentrated on u', v on v''
            auto upt = make_product_sphere_point(unit_axis(p, 0), unit_axis(q, q - 1), split);
            CHECK(m_region(upt) == MRegion::Plus);
          }
        }
}

TEST_CASE("phi1 at base points and the image identity") {
  SignatureSplit split = make_split({4, 4}, 2, 2, 2, 2);
  HyperboloidPoint a{unit_axis(2), {0, 0}, {2, 2}};       // x^o in X(2,2)
  HyperboloidPoint b{unit_axis(2), {0, 0}, {2, 2}};       // base of X(q'', p'')
  auto pt = phi1_forward(a, b, split);
  CHECK(pt.u[0] == doctest::Approx(1.0));                 // u' = first axis
  CHECK(pt.v[2] == doctest::Approx(1.0));                 // v'' = first y'' axis
  CHECK(m_region(pt) == MRegion::Plus);

  std::mt19937_64 rng(12u);
  for (int i = 0; i < 100; ++i) {
    auto ra = random_hyp(rng, {2, 2});
    auto rb = random_hyp(rng, {2, 2});
    auto im = phi1_forward(ra, rb, split);
    double lhs = im.u1_norm_sq() - im.v1_norm_sq();
    double u2 = norm_sq(im.u) - im.u1_norm_sq();
    double v2 = norm_sq(im.v) - im.v1_norm_sq();
    CHECK(lhs > 0);
    CHECK(lhs == doctest::Approx(v2 - u2).epsilon(1e-12));
  }
}

TEST_CASE("phi1 and phi2 round trips") {
  std::mt19937_64 rng(13u);
  SignatureSplit split = make_split({4, 4}, 2, 2, 2, 2);
  for (int i = 0; i < 200; ++i) {
    auto a = random_hyp(rng, {2, 2});
    auto b = random_hyp(rng, {2, 2});
    auto pt = phi1_forward(a, b, split);
    auto [a2, b2] = phi1_inverse(pt);
    for (int k = 0; k < 2; ++k) {
      CHECK(a.x[k] == doctest::Approx(a2.x[k]).epsilon(1e-12));
      CHECK(a.y[k] == doctest::Approx(a2.y[k]).epsilon(1e-12));
      CHECK(b.x[k] == doctest::Approx(b2.x[k]).epsilon(1e-12));
      CHECK(b.y[k] == doctest::Approx(b2.y[k]).epsilon(1e-12));
    }
    auto m = phi2_forward(a, b, split);  // X(q',p') x X(p'',q'') by symmetry of (2,2)
    CHECK(m_region(m) == MRegion::Minus);
    auto [c2, d2] = phi2_inverse(m);
    for (int k = 0; k < 2; ++k) CHECK(a.x[k] == doctest::Approx(c2.x[k]).epsilon(1e-12));
    (void)d2;
  }
  // inverse off the open region raises
  auto boundary = make_product_sphere_point({1 / std::sqrt(2.0), 0, 1 / std::sqrt(2.0), 0},
                                            {1 / std::sqrt(2.0), 0, 1 / std::sqrt(2.0), 0},
                                            split);
  CHECK_THROWS_AS(phi1_inverse(boundary), Error);
  CHECK_THROWS_AS(phi1_forward(HyperboloidPoint{unit_axis(3), {0, 0}, {3, 2}},
                               HyperboloidPoint{unit_axis(2), {0, 0}, {2, 2}}, split),
                  Error);
}

TEST_CASE("conformal factor scaling and symmetry") {
  std::mt19937_64 rng(14u);
  SignatureSplit split = make_split({4, 4}, 2, 2, 2, 2);
  auto a = random_hyp(rng, {2, 2}, 1.0);
  auto b = random_hyp(rng, {2, 2}, 1.0);
  TangentPair v;
  // project a random direction to the tangent space of each factor
  auto tangent = [&](const HyperboloidPoint& p, Vec* dx, Vec* dy) {
    std::normal_distribution<double> g;
    dx->assign(p.x.size(), 0.0);
    dy->assign(p.y.size(), 0.0);
    for (auto& c : *dx) c = g(rng);
    for (auto& c : *dy) c = g(rng);
    double s = (dot(p.x, *dx) - dot(p.y, *dy)) / (norm_sq(p.x) + norm_sq(p.y));
    for (std::size_t i = 0; i < dx->size(); ++i) (*dx)[i] -= s * p.x[i];
    for (std::size_t i = 0; i < dy->size(); ++i) (*dy)[i] += s * p.y[i];
  };
  tangent(a, &v.ax, &v.ay);
  tangent(b, &v.bx, &v.by);

  auto same = conformal_factor_check(a, b, split, v, v);
  CHECK(same.lhs * same.rhs > 0);  // both sides carry the same sign
  CHECK(same.lhs == doctest::Approx(same.rhs).epsilon(1e-6));

  TangentPair twice = v;
  for (auto* comp : {&twice.ax, &twice.ay, &twice.bx, &twice.by})
    for (auto& c : *comp) c *= 2.0;
  auto scaled = conformal_factor_check(a, b, split, twice, twice);
  CHECK(scaled.lhs == doctest::Approx(4 * same.lhs).epsilon(1e-5));
  CHECK(scaled.rhs == doctest::Approx(4 * same.rhs).epsilon(1e-12));

  TangentPair bad = v;
  bad.ax[0] += 0.3;  // breaks tangency
  CHECK_THROWS_AS(conformal_factor_check(a, b, split, bad, v), Error);
}

TEST_CASE("twisted pull-backs") {
  // p+q = 4: exponent zero, the pull-back is plain composition
  {
    SignatureSplit split = make_split({2, 2}, 1, 1, 1, 1);
    SphereFunction one{split, [](const ProductSpherePoint&) { return 1.0; }};
    auto pulled = twisted_pullback_forward(one);
    HyperboloidPoint a{{std::cosh(0.7)}, {std::sinh(0.7)}, {1, 1}};
    HyperboloidPoint b{{std::cosh(0.4)}, {std::sinh(0.4)}, {1, 1}};
    CHECK(pulled.f(a, b) == doctest::Approx(1.0).epsilon(1e-14));
  }
  // weight at |x|^2 = 2 is 2^{-(p+q-4)/4}
  {
    SignatureSplit split = make_split({4, 4}, 2, 2, 2, 2);
    SphereFunction one{split, [](const ProductSpherePoint&) { return 1.0; }};
    auto pulled = twisted_pullback_forward(one);
    HyperboloidPoint a{{1, 0}, {0, 0}, {2, 2}};  // |x'| = 1
    double t = std::asinh(1.0);
    HyperboloidPoint b{{std::cosh(t), 0}, {std::sinh(t), 0}, {2, 2}};  // |x''| = 1
    CHECK(pulled.f(a, b) == doctest::Approx(std::pow(2.0, -1.0)).epsilon(1e-13));
  }
  // forward and inverse are mutually inverse on samples
  {
    std::mt19937_64 rng(15u);
    SignatureSplit split = make_split({4, 4}, 2, 2, 2, 2);
    SphereFunction F{split, [](const ProductSpherePoint& pt) {
                       return std::exp(pt.u[0]) + 0.3 * pt.v[1];
                     }};
    auto there = twisted_pullback_forward(F);
    auto back = twisted_pullback_inverse(there);
    for (int i = 0; i < 50; ++i) {
      auto pt = random_sphere_point(rng, split);
      if (m_region(pt) != MRegion::Plus) continue;
      CHECK(back.f(pt) == doctest::Approx(F.f(pt)).epsilon(1e-12));
    }
  }
}

TEST_CASE("T+ extension") {
  SignatureSplit split = make_split({4, 4}, 2, 2, 2, 2);
  // f1 f2 = (first coordinate of the first factor), f2 = 1
  HypProductFunction f{split, [](const HyperboloidPoint& a, const HyperboloidPoint&) {
                         return a.x[0];
                       }};
  auto tp = t_plus_extend(f);

  // vanishes off M+
  auto minus = make_product_sphere_point({0, 0, 1, 0}, {1, 0, 0, 0}, split);
  CHECK(tp.f(minus) == 0.0);
  double r = 1.0 / std::sqrt(2.0);
  auto boundary = make_product_sphere_point({r, 0, r, 0}, {r, 0, r, 0}, split);
  CHECK(tp.f(boundary) == 0.0);

  // matches the clipped-power display on an angular chart point
  AngularChart chart;
  chart.split = split;
  chart.theta = 0.5;
  chart.phi = 1.1;
  chart.omega_p = {1, 0};
  chart.omega_pp = {1, 0};
  chart.eta_p = {1, 0};
  chart.eta_pp = {1, 0};
  auto pt = angular_chart_to_point(chart);
  double w = std::pow(std::cos(0.5), 2) - std::pow(std::cos(1.1), 2);
  double expected = std::pow(w, -1.0) * std::cos(0.5) / std::sqrt(w);
  CHECK(tp.f(pt) == doctest::Approx(expected).epsilon(1e-12));
  // and the inverse pull-back agrees there
  CHECK(tp.f(pt) == doctest::Approx(twisted_pullback_inverse(f).f(pt)).epsilon(1e-13));
}

TEST_CASE("angular chart") {
  SignatureSplit split = make_split({4, 4}, 2, 2, 2, 2);
  AngularChart chart;
  chart.split = split;
  chart.theta = 0.0;
  chart.phi = 0.9;
  chart.omega_p = {0, 1};
  chart.omega_pp = {1, 0};
  chart.eta_p = {1, 0};
  chart.eta_pp = {0, 1};
  auto pt = angular_chart_to_point(chart);
  CHECK(pt.u[2] == 0.0);  // u'' vanishes at theta = 0
  CHECK(pt.u[3] == 0.0);

  chart.theta = M_PI / 4;
  chart.phi = M_PI / 4;
  CHECK(angular_volume_weight(chart) == doctest::Approx(0.25).epsilon(1e-14));

  // weight positivity on the open chart
  for (double th = 0.1; th < M_PI / 2; th += 0.3)
    for (double ph = 0.1; ph < M_PI / 2; ph += 0.3) {
      chart.theta = th;
      chart.phi = ph;
      CHECK(angular_volume_weight(chart) > 0);
    }

  // M+ condition |cos theta| > |cos phi|
  chart.theta = 0.4;
  chart.phi = 1.0;
  CHECK(m_region(angular_chart_to_point(chart)) == MRegion::Plus);
  chart.theta = 1.0;
  chart.phi = 0.4;
  CHECK(m_region(angular_chart_to_point(chart)) == MRegion::Minus);
}

TEST_CASE("polar chart") {
  SignatureSplit split = make_split({4, 4}, 2, 2, 2, 2);
  PolarChart chart;
  chart.split = split;
  chart.omega_p = {1, 0};
  chart.omega_pp = {0, 1};
  chart.eta_p = {1, 0};
  chart.eta_pp = {0, 1};

  chart.r = 0.0;
  chart.psi = 0.3;
  auto pt = polar_chart_to_point(chart);
  CHECK(pt.u[0] == 0.0);  // cos theta = 0 stratum
  CHECK(pt.v[0] == 0.0);

  chart.r = 0.4;
  chart.psi = 0.2;  // cos 2psi > 0
  CHECK(polar_in_m_plus(chart));
  CHECK(m_region(polar_chart_to_point(chart)) == MRegion::Plus);
  chart.psi = 1.2;  // cos 2psi < 0
  CHECK(!polar_in_m_plus(chart));
  CHECK(m_region(polar_chart_to_point(chart)) == MRegion::Minus);

  // Jacobian entries of (theta, phi) -> (r, psi) by finite differences
  auto r_of = [](double th, double ph) { return std::hypot(std::cos(th), std::cos(ph)); };
  auto psi_of = [](double th, double ph) { return std::atan2(std::cos(ph), std::cos(th)); };
  double th = 1.2, ph = 1.05, h = 1e-6;
  double r0 = r_of(th, ph), psi0 = psi_of(th, ph);
  CHECK((r_of(th + h, ph) - r_of(th - h, ph)) / (2 * h) ==
        doctest::Approx(-std::cos(psi0) * std::sin(th)).epsilon(1e-8));
  CHECK((r_of(th, ph + h) - r_of(th, ph - h)) / (2 * h) ==
        doctest::Approx(-std::sin(psi0) * std::sin(ph)).epsilon(1e-8));
  CHECK((psi_of(th + h, ph) - psi_of(th - h, ph)) / (2 * h) ==
        doctest::Approx(std::sin(psi0) * std::sin(th) / r0).epsilon(1e-8));
  CHECK((psi_of(th, ph + h) - psi_of(th, ph - h)) / (2 * h) ==
        doctest::Approx(-std::cos(psi0) * std::sin(ph) / r0).epsilon(1e-8));

  // weight carries r^{p'+q'-1}
  chart.psi = 0.2;
  chart.r = 0.3;
  double w1 = polar_volume_weight(chart);
  chart.r = 0.15;
  double w2 = polar_volume_weight(chart);
  CHECK(w1 / w2 == doctest::Approx(std::pow(2.0, split.p1 + split.q1 - 1)).epsilon(1e-2));
}

TEST_CASE("case-3 stratum through the role swap") {
  SignatureSplit split = make_split({5, 5}, 2, 3, 3, 2);
  PolarChart chart;
  chart.split = split;
  chart.omega_p = {1, 0};
  chart.omega_pp = {0, 1, 0};
  chart.eta_p = {0, 0, 1};
  chart.eta_pp = {1, 0};
  chart.r = 0.3;
  chart.psi = 0.25;

  auto pt = case3_polar_chart_to_point(chart);
  // sin theta = r cos psi and sin phi = r sin psi: the u'' and v'' blocks
  // carry those factors
  double st = chart.r * std::cos(chart.psi);
  double sf = chart.r * std::sin(chart.psi);
  CHECK(pt.u[2] == doctest::Approx(0.0));
  CHECK(pt.u[3] == doctest::Approx(st).epsilon(1e-13));
  CHECK(pt.v[3] == doctest::Approx(sf).epsilon(1e-13));
  CHECK(norm_sq(pt.u) == doctest::Approx(1.0).epsilon(1e-13));

  // the weight carries r^{p''+q''-1}
  double w1 = case3_polar_volume_weight(chart);
  chart.r = 0.15;
  double w2 = case3_polar_volume_weight(chart);
  CHECK(w1 / w2 == doctest::Approx(std::pow(2.0, split.p2 + split.q2 - 1)).epsilon(1e-2));

  // chart mismatch through the pull-back machinery
  HypProductFunction f{make_split({4, 4}, 2, 2, 2, 2),
                       [](const HyperboloidPoint&, const HyperboloidPoint&) { return 1.0; }};
  auto tp = t_plus_extend(f);
  auto wrong = make_product_sphere_point({1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, split);
  CHECK_THROWS_AS(tp.f(wrong), Error);
}

TEST_CASE("boundary exponents and flags") {
  SignatureSplit split = make_split({4, 4}, 2, 2, 2, 2);
  auto h = [](int twice) { return HalfInt::from_twice(twice); };

  auto r1 = boundary_exponents(h(3), h(3), split);  // lambda' = lambda'' = 3/2
  CHECK(r1.case1_exp == doctest::Approx(1.5));
  CHECK(r1.hess_l1);

  auto r2 = boundary_exponents(h(1), h(1), split);  // lambda' = lambda'' = 1/2
  CHECK(r2.grad_l2eps);
  CHECK(!r2.hess_l1);

  // good-range boundedness of the radial exponent
  for (int tw = -2; tw <= 6; ++tw) {
    auto r = boundary_exponents(h(tw), h(tw), split);
    bool bounded = r.case2_radial_exp >= 0;
    bool good = HalfInt::from_twice(tw) >= HalfInt::from_twice(split.p1 + split.q1 - 2);
    CHECK(bounded == good);
  }

  // monotonicity of the flags in lambda' + lambda''
  SignatureSplit s2 = make_split({4, 4}, 2, 2, 2, 2);
  bool prev_l2 = false, prev_grad = false, prev_hess = false;
  for (int tw = -6; tw <= 8; ++tw) {
    auto r = boundary_exponents(h(tw), h(tw), s2);
    if (tw > -6) {
      CHECK(r.l2 >= prev_l2);
      CHECK(r.grad_l2eps >= prev_grad);
      CHECK(r.hess_l1 >= prev_hess);
    }
    prev_l2 = r.l2;
    prev_grad = r.grad_l2eps;
    prev_hess = r.hess_l1;
  }
}
