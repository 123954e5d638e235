#include <doctest.h>

#include <cmath>
#include <random>

#include "minrep/harmonics.hpp"
#include "minrep/quadrature.hpp"

using namespace minrep;
using namespace minrep::harmonics;

namespace {

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

// Sphere Laplacian via the ambient trick: extend f degree-0 homogeneously
// and take the flat Laplacian at |x| = 1.
double fd_sphere_laplacian(const ZonalHarmonic& z, const std::vector<double>& x, double h) {
  auto ext = [&](std::vector<double> p) {
    double n = 0;
    for (double c : p) n += c * c;
    n = std::sqrt(n);
    for (auto& c : p) c /= n;
    return z(p);
  };
  double lap = 0, f0 = ext(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<double> xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    lap += (ext(xp) - 2 * f0 + ext(xm)) / (h * h);
  }
  return lap;
}

}  // namespace

TEST_CASE("harmonic dimensions") {
  CHECK(dim_harmonic({0, 5}) == 1);
  CHECK(dim_harmonic({1, 7}) == 7);
  CHECK(dim_harmonic({2, 3}) == 5);
  CHECK(dim_harmonic({0, 1}) == 1);
  CHECK(dim_harmonic({1, 1}) == 1);
  CHECK(dim_harmonic({2, 1}) == 0);
  CHECK(dim_harmonic({9, 1}) == 0);
  CHECK(dim_harmonic({3, 2}) == 2);
}

TEST_CASE("zonal harmonics") {
  std::mt19937_64 rng(7u);
  ZonalHarmonic z0({0, 4}, {0, 0, 0, 1});
  ZonalHarmonic z1({1, 3}, {0, 0, 1});
  for (int i = 0; i < 10; ++i) {
    auto x4 = random_unit(rng, 4);
    CHECK(z0(x4) == 1.0);
    auto x3 = random_unit(rng, 3);
    CHECK(z1(x3) == doctest::Approx(x3[2]).epsilon(1e-14));
  }
  CHECK_THROWS_AS(z1(std::vector<double>{0.5, 0.5, 0.5}), Error);

  // eigenvalue -l(l+q-2) by the finite-difference Laplacian
  for (int q : {3, 4, 5})
    for (int l : {1, 2, 3}) {
      std::vector<double> pole(q, 0.0);
      pole[0] = 1.0;
      ZonalHarmonic z({l, q}, pole);
      for (int i = 0; i < 5; ++i) {
        auto x = random_unit(rng, q);
        double lap = fd_sphere_laplacian(z, x, 1e-4);
        double expected = -static_cast<double>(l) * (l + q - 2) * z(x);
        CHECK(std::abs(lap - expected) < 1e-6 * (1 + std::abs(expected)));
      }
    }
}

TEST_CASE("sphere Yamabe eigenvalues") {
  CHECK(yamabe_eigenvalue_sphere({0, 3}) == doctest::Approx(0.0));
  CHECK(yamabe_eigenvalue_sphere({1, 2}) == doctest::Approx(-0.75));
  // consistency with the Laplacian eigenvalue and the conformal shift of
  // the (q,0) hyperboloid convention
  for (int q : {2, 3, 4, 5, 6})
    for (int l : {0, 1, 2, 3}) {
      double shift = 0.25 * (q - 1) * (q - 3);
      double lhs = -static_cast<double>(l) * (l + q - 2) - shift;
      CHECK(lhs == doctest::Approx(yamabe_eigenvalue_sphere({l, q})).epsilon(1e-14));
    }
}

TEST_CASE("classical branching enumeration") {
  auto n0 = classical_branching(0, 2, 2);
  REQUIRE(n0.size() == 1);
  CHECK(n0[0] == std::pair{0, 0});

  auto n2 = classical_branching(2, 2, 2);
  REQUIRE(n2.size() == 4);
  CHECK(n2[0] == std::pair{0, 0});
  CHECK(n2[1] == std::pair{2, 0});
  CHECK(n2[2] == std::pair{1, 1});
  CHECK(n2[3] == std::pair{0, 2});

  // keystone dimension identity
  for (int n = 0; n <= 10; ++n)
    for (int q1 = 1; q1 <= 6; ++q1)
      for (int q2 = 1; q2 <= 6; ++q2) {
        std::int64_t total = 0;
        for (auto [k, l] : classical_branching(n, q1, q2))
          total += dim_harmonic({k, q1}) * dim_harmonic({l, q2});
        CHECK(total == dim_harmonic({n, q1 + q2}));
      }
}

TEST_CASE("zonal harmonics of distinct degrees are orthogonal") {
  for (int q : {3, 4}) {
    auto rule = quadrature::SphereRule::create(q, 24);
    std::vector<double> pole(q, 0.0);
    pole[q - 1] = 1.0;
    for (int l1 : {0, 1, 2, 4})
      for (int l2 : {1, 3}) {
        if (l1 == l2) continue;
        ZonalHarmonic a({l1, q}, pole), b({l2, q}, pole);
        double ip = rule.integrate([&](const std::vector<double>& x) { return a(x) * b(x); });
        CHECK(std::abs(ip) < 1e-8);
      }
  }
}

TEST_CASE("sphere volumes and zonal norms") {
  CHECK(sphere_volume(2) == doctest::Approx(2 * M_PI).epsilon(1e-14));
  CHECK(sphere_volume(3) == doctest::Approx(4 * M_PI).epsilon(1e-14));
  CHECK(sphere_volume(4) == doctest::Approx(2 * M_PI * M_PI).epsilon(1e-14));
  // |Z_l|^2 = vol / dim against quadrature
  for (int q : {3, 4})
    for (int l : {0, 1, 2, 3}) {
      auto rule = quadrature::SphereRule::create(q, 24);
      std::vector<double> pole(q, 0.0);
      pole[0] = 1.0;
      ZonalHarmonic z({l, q}, pole);
      double n2 = rule.integrate([&](const std::vector<double>& x) { return z(x) * z(x); });
      CHECK(n2 == doctest::Approx(z.l2_norm_sq()).epsilon(1e-10));
    }
}
