#include <doctest.h>

#include <cmath>
#include <random>

#include "minrep/harmonics.hpp"
#include "minrep/param_sets.hpp"
#include "minrep/jacobi.hpp"
#include "minrep/suites.hpp"
#include "minrep/verify.hpp"

using namespace minrep;
using namespace minrep::quadrature;

TEST_CASE("quadrature reproduces the closed-form norm constants") {
  auto r1 = verify_v_pm(HalfInt(3), HalfInt(1), HalfInt(1), 1e-9);
  CHECK(r1.exact == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r1.rel_err < 1e-9);

  auto r2 = verify_v_pp(HalfInt(1), HalfInt(1), HalfInt(3), 1e-9);
  CHECK(r2.exact == doctest::Approx(1.0 / 12).epsilon(1e-12));
  CHECK(r2.rel_err < 1e-9);

  // half-integer parameters, including a full power of pi in the constant
  auto r3 = verify_v_pm(HalfInt(4), HalfInt::from_twice(1), HalfInt::from_twice(1), 1e-8);
  CHECK(r3.rel_err < 1e-8);

  CHECK_THROWS_AS(verify_v_pm(HalfInt(2), HalfInt(1), HalfInt(1), 1e-8), Error);
}

TEST_CASE("closed forms match quadrature at 1e-9 over the full grid") {
  suites::SuiteConfig cfg;
  cfg.tol_v_quadrature = 1e-9;
  auto suite = suites::suite_v_pm(cfg);
  CHECK(suite.all_pass());
  CHECK(suite.cases.size() >= 21);  // >= 20 triples plus the count case
}

TEST_CASE("norm integrand is positive and decays at the expected rate") {
  specfun::JacobiFunctionSpec spec{1.0, 3.0, 1.0};
  auto integrand = [&](double t) {
    double phi = specfun::jacobi_phi(spec, t);
    return phi * phi * std::pow(std::cosh(t), 2 * 3.0 + 1) * std::pow(std::sinh(t), 2 * 1.0 + 1);
  };
  for (double t = 0.1; t < 6.0; t += 0.3) CHECK(integrand(t) > 0);
  // log-slope on a late window is -2 lambda
  double t1 = 7.0, t2 = 10.0;
  double slope = (std::log(integrand(t2)) - std::log(integrand(t1))) / (t2 - t1);
  CHECK(std::abs(slope + 2 * spec.lam) < 0.01);
}

TEST_CASE("pi-norm against the L2 norm") {
  Signature sig{4, 4};
  // lambda > 0: ratio pi/L2 equals lambda
  for (auto [m, n, tw] : {std::tuple{2, 0, 2}, std::tuple{3, 1, 2}, std::tuple{4, 0, 6}}) {
    KTypeData f{m, n, 1.0, 1.0, HalfInt::from_twice(tw)};
    auto rep = pi_norm(f, sig);
    REQUIRE(rep.l2_norm_sq.has_value());
    CHECK(rep.pi_norm_sq / *rep.l2_norm_sq ==
          doctest::Approx(rep.lambda).epsilon(1e-7));
  }

  // lambda in {0, -1/2}: the norm stays positive
  {
    KTypeData f{1, 0, 1.0, 1.0, HalfInt(0)};
    auto rep = pi_norm(f, sig);
    CHECK(rep.pi_norm_sq > 0);
    CHECK(!rep.l2_norm_sq.has_value());
  }
  {
    KTypeData f{0, 0, 1.0, 1.0, -HalfInt::half()};
    auto rep = pi_norm(f, Signature{3, 2});
    CHECK(rep.pi_norm_sq > 0);
  }

  // quadratic scaling in the harmonic factor
  KTypeData f{2, 0, 1.0, 1.0, HalfInt(1)};
  KTypeData f4{2, 0, 4.0, 1.0, HalfInt(1)};
  CHECK(pi_norm(f4, sig).pi_norm_sq ==
        doctest::Approx(4 * pi_norm(f, sig).pi_norm_sq).epsilon(1e-13));
}

TEST_CASE("minimal-representation norm") {
  CHECK(minrep_norm_sq(0, 0, 1.0, 1.0, {4, 4}) == doctest::Approx(1.0));
  CHECK(minrep_norm_sq(2, 2, 3.0, 5.0, {4, 4}) == doctest::Approx(3 * 15.0));
  CHECK(minrep_norm_sq(1, 0, 1.0, 1.0, {2, 4}) == doctest::Approx(1.0));
  for (int n : {0, 1, 2, 3}) CHECK(n + 3.0 / 2 - 1 > 0);  // positivity for q = 3
  CHECK_THROWS_AS(minrep_norm_sq(0, 1, 1.0, 1.0, {4, 4}), Error);
}

TEST_CASE("pull-back formula for pure K'-types") {
  CHECK(lemma84_pullback_check(1, 0, 1, 4, 1, 3) < 1e-9);
  CHECK(lemma84_pullback_check(2, 1, 1, 4, 1, 3) < 1e-9);
  // M = 1 when n = k + l
  HalfInt lam = HalfInt::from_twice(2 * 2 + 3 - 2);   // l=2, q''=3
  HalfInt lamp = HalfInt::from_twice(2 * 2 + 4 - 2);  // m=2, p=4
  HalfInt lampp = HalfInt::from_twice(2 * 0 + 1 - 2); // k=0, q'=1
  CHECK(exact::m_constant_exact(lam, lamp, lampp) == exact::GammaValue::one());
  CHECK(lemma84_pullback_check(2, 0, 2, 4, 1, 3) < 1e-9);
  CHECK_THROWS_AS(lemma84_pullback_check(1, 1, 1, 4, 1, 3), Error);  // parity broken
}

TEST_CASE("zonal projection: pure harmonics and rotation invariance") {
  // project Z_l about an arbitrary (non-axis) pole with the reproducing
  // kernel: degree matches reproduce, others vanish
  const int q = 3;
  auto rule = SphereRule::create(q, 24);
  std::vector<double> pole{0.48, 0.6, 0.64};
  double n2 = 0;
  for (double c : pole) n2 += c * c;
  for (auto& c : pole) c /= std::sqrt(n2);
  harmonics::ZonalHarmonic z2({2, q}, pole);

  for (int l : {0, 1, 2, 3}) {
    double dim = static_cast<double>(harmonics::dim_harmonic({l, q}));
    double vol = harmonics::sphere_volume(q);
    // evaluate the projection at a few points eta
    std::mt19937_64 rng(5u);
    std::normal_distribution<double> g;
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<double> eta(q);
      double m2 = 0;
      for (auto& c : eta) {
        c = g(rng);
        m2 += c * c;
      }
      for (auto& c : eta) c /= std::sqrt(m2);
      double proj = (dim / vol) * rule.integrate([&](const std::vector<double>& sigma) {
        double dot = 0;
        for (int i = 0; i < q; ++i) dot += eta[i] * sigma[i];
        return harmonics::zonal_kernel(l, q, dot) * z2(sigma);
      });
      double expected = l == 2 ? z2(eta) : 0.0;
      CHECK(std::abs(proj - expected) < 1e-8);
    }
  }
}

TEST_CASE("parseval collapse case") {
  ParsevalSpec spec;
  spec.terms = {{2, 1.0}};
  spec.alpha = 0.0;  // y-pole inside the y' block
  auto rep = parseval_verify(4, 1, 3, spec, 2, 1e-6);
  CHECK(rep.rel_err < 1e-7);
  CHECK(rep.rel_err_routes < 1e-8);
  double above = 0;
  for (const auto& t : rep.per_l)
    if (t.l > 0) above += std::abs(t.contribution);
  CHECK(above < 1e-9 * std::abs(rep.lhs));
}

TEST_CASE("parseval reports an insufficient l-truncation") {
  ParsevalSpec spec;
  spec.terms = {{3, 1.0}};
  spec.alpha = 0.9;  // most of the mass sits in high l
  CHECK_THROWS_AS(parseval_verify(4, 1, 3, spec, 1, 1e-8), Error);
}

TEST_CASE("boundary probe verdicts") {
  SignatureSplit split = make_split({4, 4}, 2, 2, 2, 2);
  auto conv = l2_boundary_probe(2.0, 2.0, split, 0);
  CHECK(conv.converged);
  CHECK(std::abs(conv.growth_exponent_fit - 2.0) < 0.05);

  // synthetic off-lattice parameters: order-1 probe diverges when
  // lambda' + lambda'' < 1
  auto div = l2_boundary_probe(0.25, 0.25, split, 1);
  CHECK(!div.converged);

  CHECK_THROWS_AS(l2_boundary_probe(1.0, 1.0, make_split({4, 4}, 4, 2, 0, 2), 0), Error);
  CHECK_THROWS_AS(l2_boundary_probe(1.0, 1.0, split, 3), Error);
}
