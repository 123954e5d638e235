#include <doctest.h>

#include <cmath>

#include "minrep/harmonics.hpp"
#include "minrep/operators.hpp"

using namespace minrep;
using namespace minrep::operators;

TEST_CASE("conformal shift") {
  CHECK(yamabe_shift({2, 1}) == doctest::Approx(0.0));
  CHECK(yamabe_shift({3, 0}) == doctest::Approx(0.0));
  CHECK(yamabe_shift({4, 4}) == doctest::Approx(35.0 / 4));
  // the two eigenvalue conventions differ exactly by the shift
  for (int p = 1; p <= 6; ++p)
    for (int q = 0; q <= 6; ++q)
      for (double lam : {-1.0, 0.0, 0.5, 2.0, 3.5})
        CHECK(laplace_eigenvalue({p, q}, lam) - yamabe_shift({p, q}) ==
              doctest::Approx(yamabe_eigenvalue(lam)).epsilon(1e-14));
}

TEST_CASE("product Yamabe split matches the compact factor") {
  // the X(p,q') factor carries 1/4 - (l + q''/2 - 1)^2, i.e. lambda = l + q''/2 - 1
  for (int l : {0, 1, 2, 3})
    for (int qpp : {1, 2, 3, 4}) {
      double lam = l + qpp / 2.0 - 1.0;
      double sphere = harmonics::yamabe_eigenvalue_sphere({l, qpp});
      CHECK(product_yamabe_eigenvalue(yamabe_eigenvalue(lam), sphere) ==
            doctest::Approx(0.0).epsilon(1e-14));
    }
  CHECK(0 + 2 / 2.0 - 1.0 == doctest::Approx(0.0));  // l=0, q''=2 -> lambda = 0
  CHECK(product_yamabe_eigenvalue(0.5, 0.5) == 0.0);
}

TEST_CASE("radial ansatz values and parity") {
  Signature sig{4, 4};
  auto f = radial_ansatz(1, 2, sig, 1.5, {1, 0, 0, 0}, {0, 0, 0, 1});

  // sinh factor kills t = 0 when n > 0
  geometry::HyperboloidPoint base{{1, 0, 0, 0}, {0, 0, 0, 0}, sig};
  CHECK(f(base) == 0.0);

  geometry::HyperboloidPoint pt{{std::cosh(0.8), 0, 0, 0},
                                {0, 0, std::sinh(0.8) * 0.6, std::sinh(0.8) * 0.8},
                                sig};
  geometry::HyperboloidPoint neg = pt;
  for (auto& c : neg.x) c = -c;
  for (auto& c : neg.y) c = -c;
  CHECK(f(neg) == doctest::Approx(std::pow(-1.0, 1 + 2) * f(pt)).epsilon(1e-13));
}

TEST_CASE("radial Laplacian validated on harmonic-polynomial restrictions") {
  for (Signature sig : {Signature{4, 4}, Signature{3, 2}, Signature{2, 5}}) {
    double rho = (sig.p + sig.q - 2) / 2.0;
    // d = 0: constants, lambda = rho, eigenvalue 0
    auto u0 = [](double) { return 1.0; };
    for (double t : {0.5, 1.2})
      CHECK(std::abs(apply_radial_laplacian(0, 0, sig, u0, t)) < 1e-8);
    // d = 1: restriction of x_1, profile cosh t at K-type (1,0),
    // eigenvalue -(p+q-1) = -lam^2 + rho^2 at lam = 1 + rho
    auto u1 = [](double t) { return std::cosh(t); };
    for (double t : {0.4, 1.0, 1.7}) {
      double expected = -(sig.p + sig.q - 1) * std::cosh(t);
      CHECK(apply_radial_laplacian(1, 0, sig, u1, t) ==
            doctest::Approx(expected).epsilon(1e-8));
      double lam = 1 + rho;
      CHECK(laplace_eigenvalue(sig, lam) == doctest::Approx(-(sig.p + sig.q - 1)));
    }
  }
}

TEST_CASE("radial ansatz solves the eigen-equation") {
  Signature sig{4, 4};
  int m = 3, n = 1;
  double lam = 1.0;  // lattice: lambda' - lambda'' - lambda - 1 = 4 - 2 - 1 - 1 = 0
  double target = laplace_eigenvalue(sig, lam);
  auto u = [&](double t) { return radial_profile(m, n, sig, lam, t); };
  for (double t : {0.3, 0.7, 1.3, 2.0}) {
    double lhs = apply_radial_laplacian(m, n, sig, u, t);
    CHECK(lhs == doctest::Approx(target * u(t)).epsilon(1e-7));
  }
}

TEST_CASE("K-type membership on the sphere product") {
  CHECK(ktype_membership_on_M(2, 2, {4, 4}));
  CHECK(ktype_membership_on_M(1, 0, {2, 4}));
  CHECK(!ktype_membership_on_M(0, 5, {4, 4}));
  CHECK(!ktype_membership_on_M(0, 0, {3, 4}));  // odd difference never matches
  CHECK_THROWS_AS(ktype_membership_on_M(0, 0, {0, 4}), Error);
}
