#include "minrep/suites.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "minrep/branching.hpp"
#include "minrep/geometry.hpp"
#include "minrep/harmonics.hpp"
#include "minrep/jacobi.hpp"
#include "minrep/operators.hpp"
#include "minrep/param_sets.hpp"
#include "minrep/verify.hpp"

namespace minrep::suites {

using report::VerifyCase;
using report::VerifySuite;

namespace {

std::vector<HalfInt> half_grid(HalfInt lo, HalfInt hi) {
  std::vector<HalfInt> out;
  for (HalfInt x = lo; x <= hi; x = x + HalfInt::half()) out.push_back(x);
  return out;
}

std::string triple_name(HalfInt lp, HalfInt lpp, HalfInt lam) {
  return "lp=" + lp.str() + " lpp=" + lpp.str() + " l=" + lam.str();
}

geometry::Vec random_unit(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  geometry::Vec v(dim);
  double n2 = 0;
  do {
    n2 = 0;
    for (auto& c : v) {
      c = g(rng);
      n2 += c * c;
    }
  } while (n2 < 1e-8);
  double inv = 1.0 / std::sqrt(n2);
  for (auto& c : v) c *= inv;
  return v;
}

geometry::HyperboloidPoint random_hyperboloid_point(std::mt19937_64& rng, Signature sig,
                                                    double t_max = 1.5) {
  std::uniform_real_distribution<double> ut(0.0, t_max);
  double t = ut(rng);
  geometry::Vec x = random_unit(rng, sig.p);
  for (auto& c : x) c *= std::cosh(t);
  geometry::Vec y;
  if (sig.q > 0) {
    y = random_unit(rng, sig.q);
    for (auto& c : y) c *= std::sinh(t);
  }
  return geometry::HyperboloidPoint{std::move(x), std::move(y), sig};
}

// random tangent vector at a hyperboloid point (Euclidean projection onto
// the tangent space of |x|^2 - |y|^2 = 1)
void random_tangent(std::mt19937_64& rng, const geometry::HyperboloidPoint& p, geometry::Vec* dx,
                    geometry::Vec* dy) {
  std::normal_distribution<double> g;
  dx->assign(p.x.size(), 0.0);
  dy->assign(p.y.size(), 0.0);
  for (auto& c : *dx) c = g(rng);
  for (auto& c : *dy) c = g(rng);
  // gradient of the defining function is (x, -y)
  double num = geometry::dot(p.x, *dx) - geometry::dot(p.y, *dy);
  double den = geometry::norm_sq(p.x) + geometry::norm_sq(p.y);
  double s = num / den;
  for (std::size_t i = 0; i < dx->size(); ++i) (*dx)[i] -= s * p.x[i];
  for (std::size_t i = 0; i < dy->size(); ++i) (*dy)[i] += s * p.y[i];
}

}  // namespace

VerifySuite suite_msq(const SuiteConfig& cfg) {
  VerifySuite suite;
  suite.identity = "msq";
  int finite_cases = 0, total = 0;
  for (HalfInt lam : half_grid(HalfInt::half(), cfg.grid_cap))
    for (HalfInt lpp : half_grid(HalfInt::half(), cfg.grid_cap))
      for (HalfInt lp : half_grid(HalfInt::half(), cfg.grid_cap)) {
        HalfInt e2 = lp - lpp - lam - HalfInt(1);
        if (!e2.is_integer() || e2.integer() % 2 != 0) continue;
        exact::GammaValue lhs =
            exact::GammaValue(exact::Rational(lp.twice(), 2)) *
            exact::v_constant_exact(exact::VKind::pp, lpp, lam, lp);
        exact::GammaValue m = exact::m_constant_exact(lam, lp, lpp);
        exact::GammaValue rhs = m.squared() *
                                exact::GammaValue(exact::Rational(lam.twice(), 2)) *
                                exact::v_constant_exact(exact::VKind::pm, lp, lpp, lam);
        bool equal = lhs == rhs;
        ++total;
        if (lhs.is_finite() && !lhs.is_zero()) ++finite_cases;
        suite.cases.push_back(VerifyCase{triple_name(lp, lpp, lam), equal ? 0.0 : 1.0, 0.0, equal});
      }
  suite.cases.push_back(VerifyCase{"grid has >= 30 admissible cases", 0.0, 0.0, total >= 30});
  suite.cases.push_back(VerifyCase{"grid has >= 20 finite cases", 0.0, 0.0, finite_cases >= 20});
  return suite;
}

namespace {

VerifySuite v_suite(bool pm, const SuiteConfig& cfg) {
  VerifySuite suite;
  suite.identity = pm ? "v_pm" : "v_pp";
  int cases = 0;
  for (HalfInt a : half_grid(HalfInt::half(), cfg.grid_cap))
    for (HalfInt b : half_grid(HalfInt::half(), cfg.grid_cap))
      for (int j = 0;; ++j) {
        HalfInt c = a + b + HalfInt(1 + 2 * j);
        if (c > cfg.grid_cap) break;
        quadrature::VerifyResult r =
            pm ? quadrature::verify_v_pm(c, b, a, cfg.tol_v_quadrature)
                // for V^{++} the spectral slot carries the large parameter
                : quadrature::verify_v_pp(a, b, c, cfg.tol_v_quadrature);
        std::string name = pm ? triple_name(c, b, a) : triple_name(a, b, c);
        suite.cases.push_back(
            VerifyCase{name, r.rel_err, cfg.tol_v_quadrature, r.rel_err <= cfg.tol_v_quadrature});
        ++cases;
      }
  suite.cases.push_back(VerifyCase{"grid has >= 20 triples", 0.0, 0.0, cases >= 20});
  return suite;
}

}  // namespace

VerifySuite suite_v_pm(const SuiteConfig& cfg) { return v_suite(true, cfg); }
VerifySuite suite_v_pp(const SuiteConfig& cfg) { return v_suite(false, cfg); }

VerifySuite suite_triangular(const SuiteConfig& cfg) {
  VerifySuite suite;
  suite.identity = "triangular";
  for (HalfInt lam : half_grid(HalfInt::half(), HalfInt::from_twice(5)))
    for (HalfInt lpp : half_grid(HalfInt::half(), HalfInt::from_twice(5)))
      for (int j = 0;; ++j) {
        HalfInt lp = lam + lpp + HalfInt(1 + 2 * j);
        if (lp > cfg.grid_cap) break;
        double M = exact::m_constant_exact(lam, lp, lpp).to_double();
        double worst = 0;
        for (int i = 0; i < 30; ++i) {
          double t = 0.1 + (3.0 - 0.1) * i / 29.0;
          double theta = std::asin(1.0 / std::cosh(t));
          // phi_{i lambda'}^{(lambda, lambda'')}: first superscript slot
          // carries lambda
          double lhs =
              specfun::jacobi_phi_imag({lp.value(), lpp.value(), lam.value()}, theta);
          double rhs = M * std::pow(std::cosh(t), (lam + lp + lpp + HalfInt(1)).value()) *
                       specfun::jacobi_phi({lam.value(), lp.value(), lpp.value()}, t);
          worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300));
        }
        suite.cases.push_back(VerifyCase{triple_name(lp, lpp, lam), worst, cfg.tol_triangular,
                                         worst < cfg.tol_triangular});
      }
  return suite;
}

VerifySuite suite_lemma84(const SuiteConfig& cfg) {
  VerifySuite suite;
  suite.identity = "lemma84";
  struct Case {
    int m, k, l, p, qp, qpp;
  };
  for (Case c : {Case{1, 0, 1, 4, 1, 3}, Case{1, 1, 0, 4, 1, 3}, Case{2, 0, 2, 4, 1, 3},
                 Case{2, 0, 0, 4, 1, 3}, Case{2, 1, 1, 4, 1, 3}, Case{3, 1, 2, 4, 1, 3},
                 Case{2, 1, 1, 4, 3, 1}, Case{2, 2, 0, 4, 3, 1}, Case{3, 1, 1, 6, 1, 3}}) {
    double dev = quadrature::lemma84_pullback_check(c.m, c.k, c.l, c.p, c.qp, c.qpp);
    std::ostringstream name;
    name << "m=" << c.m << " k=" << c.k << " l=" << c.l << " (p,q',q'')=(" << c.p << "," << c.qp
         << "," << c.qpp << ")";
    suite.cases.push_back(VerifyCase{name.str(), dev, cfg.tol_lemma84, dev <= cfg.tol_lemma84});
  }
  return suite;
}

VerifySuite suite_parseval(const SuiteConfig& cfg) {
  VerifySuite suite;
  suite.identity = "parseval";
  const int p = cfg.parseval_p, qp = cfg.parseval_q_prime, qpp = cfg.parseval_q_doubleprime;
  const int q = qp + qpp;

  // collapse case: the y-pole lies in the y' block, so only l = 0 survives
  // and the identity reduces to the exact norm-constant identity
  {
    quadrature::ParsevalSpec spec;
    spec.terms = {{2 + std::max(0, (p - q) / 2), 1.0}};
    spec.alpha = 0.0;
    auto rep = quadrature::parseval_verify(p, qp, qpp, spec, spec.terms[0].first, 1e-6);
    suite.cases.push_back(
        VerifyCase{"collapse to l=0, single K-type", rep.rel_err, 1e-7, rep.rel_err < 1e-7});
    double mass_above_l0 = 0;
    for (const auto& t : rep.per_l)
      if (t.l > 0) mass_above_l0 += std::abs(t.contribution);
    suite.cases.push_back(VerifyCase{"collapse has no mass above l=0",
                                     mass_above_l0 / std::abs(rep.lhs), 1e-9,
                                     mass_above_l0 <= 1e-9 * std::abs(rep.lhs)});
  }

  // multi-term zonal test function mixing y' and y''
  {
    quadrature::ParsevalSpec spec;
    spec.alpha = 0.6;
    int l_max = 0;
    for (auto [n, c] : {std::pair{0, 1.0}, std::pair{1, 0.8}, std::pair{2, 0.6},
                        std::pair{3, 0.4}}) {
      if (n + (q - p) / 2 < 0) continue;
      spec.terms.emplace_back(n, c);
      l_max = std::max(l_max, n);
    }
    auto rep = quadrature::parseval_verify(p, qp, qpp, spec, l_max, cfg.tol_parseval);
    suite.cases.push_back(VerifyCase{"multi-term zonal, norm-sum route", rep.rel_err,
                                     cfg.tol_parseval, rep.rel_err <= cfg.tol_parseval});
    suite.cases.push_back(VerifyCase{"explicit-coefficient route matches the pi-norm route",
                                     rep.rel_err_routes, cfg.tol_parseval_routes,
                                     rep.rel_err_routes <= cfg.tol_parseval_routes});
    suite.cases.push_back(VerifyCase{"pulled-back K'-components match the radial profile",
                                     rep.profile_residual, 1e-8, rep.profile_residual <= 1e-8});
  }
  return suite;
}

VerifySuite suite_eigen(const SuiteConfig& cfg) {
  VerifySuite suite;
  suite.identity = "eigen";
  struct Case {
    Signature sig;
    int m, n;
    HalfInt lam;
  };
  std::vector<Case> grid;
  for (Signature sig : {Signature{4, 4}, Signature{3, 3}, Signature{2, 4}, Signature{5, 3},
                        Signature{4, 2}}) {
    // lambda = lambda' - lambda'' - 1 keeps each case on the K-type lattice
    for (auto [m, n] : {std::pair{2, 0}, std::pair{3, 0}, std::pair{3, 1}, std::pair{4, 0},
                        std::pair{4, 2}}) {
      HalfInt lam = HalfInt::from_twice(2 * (m - n - 1) + (sig.p - sig.q));
      if (lam <= HalfInt(0)) continue;
      grid.push_back({sig, m, n, lam});
    }
  }
  int count = 0;
  for (const Case& c : grid) {
    if (count >= 20) break;
    ++count;
    double lam = c.lam.value();
    double rho0 = (c.sig.p + c.sig.q - 2) / 2.0;
    double target = operators::laplace_eigenvalue(c.sig, lam);
    auto u = [&](double t) { return operators::radial_profile(c.m, c.n, c.sig, lam, t); };
    double umax = 0;
    for (double t : {0.35, 0.8, 1.5}) umax = std::max(umax, std::abs(u(t)));
    // the eigenvalue itself can vanish (lambda = rho); scale by the natural
    // magnitude of the two eigenvalue conventions instead
    double scale = umax * std::max(std::abs(target), lam * lam + rho0 * rho0);
    double worst = 0;
    for (double t : {0.35, 0.8, 1.5}) {
      double res = operators::apply_radial_laplacian(c.m, c.n, c.sig, u, t) - target * u(t);
      worst = std::max(worst, std::abs(res) / scale);
    }
    std::ostringstream name;
    name << "residual (p,q)=(" << c.sig.p << "," << c.sig.q << ") (m,n)=(" << c.m << "," << c.n
         << ") lambda=" << c.lam.str();
    suite.cases.push_back(
        VerifyCase{name.str(), worst, cfg.tol_eigen_residual, worst < cfg.tol_eigen_residual});

    double rho = (c.sig.p + c.sig.q - 2) / 2.0;
    specfun::JacobiFunctionSpec spec{lam, c.m + c.sig.p / 2.0 - 1, c.n + c.sig.q / 2.0 - 1};
    auto fit = specfun::asymptotic_decay_check(spec, rho, c.m, c.n);
    double rate_err = std::abs(fit.fitted_rate + lam + rho);
    std::ostringstream name2;
    name2 << "decay rate (p,q)=(" << c.sig.p << "," << c.sig.q << ") (m,n)=(" << c.m << ","
          << c.n << ") lambda=" << c.lam.str();
    suite.cases.push_back(
        VerifyCase{name2.str(), rate_err, cfg.tol_decay_rate, rate_err < cfg.tol_decay_rate});
  }
  suite.cases.push_back(VerifyCase{"grid has 20 cases", 0.0, 0.0, count >= 20});
  return suite;
}

VerifySuite suite_conformal(const SuiteConfig& cfg) {
  VerifySuite suite;
  suite.identity = "conformal";
  std::mt19937_64 rng(cfg.seed);

  for (SignatureSplit split : {make_split({4, 4}, 2, 2, 2, 2), make_split({3, 3}, 1, 2, 2, 1)}) {
    const Signature first{split.p1, split.q1};
    const Signature second_plus{split.q2, split.p2};
    double worst_rt = 0;
    for (int i = 0; i < cfg.roundtrip_points; ++i) {
      auto a = random_hyperboloid_point(rng, first);
      auto b = random_hyperboloid_point(rng, second_plus);
      auto pt = geometry::phi1_forward(a, b, split);
      auto [a2, b2] = geometry::phi1_inverse(pt);
      for (std::size_t k = 0; k < a.x.size(); ++k)
        worst_rt = std::max(worst_rt, std::abs(a.x[k] - a2.x[k]));
      for (std::size_t k = 0; k < a.y.size(); ++k)
        worst_rt = std::max(worst_rt, std::abs(a.y[k] - a2.y[k]));
      for (std::size_t k = 0; k < b.x.size(); ++k)
        worst_rt = std::max(worst_rt, std::abs(b.x[k] - b2.x[k]));
      for (std::size_t k = 0; k < b.y.size(); ++k)
        worst_rt = std::max(worst_rt, std::abs(b.y[k] - b2.y[k]));
    }
    std::ostringstream n1;
    n1 << "phi1 round trip, split (" << split.p1 << "," << split.q1 << "|" << split.p2 << ","
       << split.q2 << ")";
    suite.cases.push_back(
        VerifyCase{n1.str(), worst_rt, cfg.tol_roundtrip, worst_rt <= cfg.tol_roundtrip});

    // phi2 round trip on the mirrored factors
    const Signature m_first{split.q1, split.p1};
    const Signature m_second{split.p2, split.q2};
    worst_rt = 0;
    for (int i = 0; i < cfg.roundtrip_points; ++i) {
      auto a = random_hyperboloid_point(rng, m_first);
      auto b = random_hyperboloid_point(rng, m_second);
      auto pt = geometry::phi2_forward(a, b, split);
      auto [a2, b2] = geometry::phi2_inverse(pt);
      for (std::size_t k = 0; k < a.x.size(); ++k)
        worst_rt = std::max(worst_rt, std::abs(a.x[k] - a2.x[k]));
      for (std::size_t k = 0; k < b.x.size(); ++k)
        worst_rt = std::max(worst_rt, std::abs(b.x[k] - b2.x[k]));
    }
    std::ostringstream n2;
    n2 << "phi2 round trip, split (" << split.p1 << "," << split.q1 << "|" << split.p2 << ","
       << split.q2 << ")";
    suite.cases.push_back(
        VerifyCase{n2.str(), worst_rt, cfg.tol_roundtrip, worst_rt <= cfg.tol_roundtrip});

    // twisted pull-back round trip on a smooth sample function
    geometry::HypProductFunction f{
        split, [](const geometry::HyperboloidPoint& a, const geometry::HyperboloidPoint& b) {
          return std::exp(-0.3 * geometry::norm_sq(a.y)) * (1.0 + 0.5 * b.x[0]) +
                 0.25 * a.x[0] * b.x[0];
        }};
    auto back = geometry::twisted_pullback_forward(geometry::twisted_pullback_inverse(f));
    double worst_tp = 0;
    for (int i = 0; i < cfg.roundtrip_points; ++i) {
      auto a = random_hyperboloid_point(rng, first);
      auto b = random_hyperboloid_point(rng, second_plus);
      double v1 = f.f(a, b), v2 = back.f(a, b);
      worst_tp = std::max(worst_tp, std::abs(v1 - v2) / std::max(1.0, std::abs(v1)));
    }
    std::ostringstream n3;
    n3 << "twisted pull-back round trip, split (" << split.p1 << "," << split.q1 << "|"
       << split.p2 << "," << split.q2 << ")";
    suite.cases.push_back(
        VerifyCase{n3.str(), worst_tp, cfg.tol_roundtrip, worst_tp <= cfg.tol_roundtrip});

    // conformal factor law
    double worst_cf = 0;
    for (int i = 0; i < cfg.conformal_points; ++i) {
      auto a = random_hyperboloid_point(rng, first, 1.0);
      auto b = random_hyperboloid_point(rng, second_plus, 1.0);
      geometry::TangentPair v, w;
      random_tangent(rng, a, &v.ax, &v.ay);
      random_tangent(rng, b, &v.bx, &v.by);
      random_tangent(rng, a, &w.ax, &w.ay);
      random_tangent(rng, b, &w.bx, &w.by);
      auto chk = geometry::conformal_factor_check(a, b, split, v, w);
      double scale = std::max({std::abs(chk.lhs), std::abs(chk.rhs), 1e-3});
      worst_cf = std::max(worst_cf, std::abs(chk.lhs - chk.rhs) / scale);
    }
    std::ostringstream n4;
    n4 << "conformal factor law, split (" << split.p1 << "," << split.q1 << "|" << split.p2 << ","
       << split.q2 << ")";
    suite.cases.push_back(
        VerifyCase{n4.str(), worst_cf, cfg.tol_conformal, worst_cf <= cfg.tol_conformal});
  }
  return suite;
}

VerifySuite suite_boundary(const SuiteConfig& cfg) {
  (void)cfg;
  VerifySuite suite;
  suite.identity = "boundary";
  SignatureSplit split = make_split({4, 4}, 2, 2, 2, 2);
  struct Case {
    double lp, lpp;
    int order;
  };
  // spans both sides of the three thresholds; lambda' + lambda'' = 0 is
  // avoided for the derivative probes, where the leading power of the
  // synthetic function differentiates to zero and the sample is more
  // regular than the generic prediction
  const Case grid[12] = {
      {-1.0, -0.5, 0}, {-0.5, 0.0, 0}, {1.0, 1.0, 0}, {-2.0, 0.5, 0},
      {0.0, 0.5, 1},   {0.5, 0.5, 1},  {1.5, 1.5, 1}, {0.5, 0.0, 1},
      {0.5, 0.5, 2},   {1.5, 1.5, 2},  {0.5, 1.0, 2}, {2.0, 1.5, 2},
  };
  for (const Case& c : grid) {
    auto flags = geometry::boundary_exponents(HalfInt::from_twice(std::llround(2 * c.lp)),
                                              HalfInt::from_twice(std::llround(2 * c.lpp)), split);
    bool predicted = c.order == 0 ? flags.l2 : c.order == 1 ? flags.grad_l2eps : flags.hess_l1;
    auto probe = quadrature::l2_boundary_probe(c.lp, c.lpp, split, c.order);
    std::ostringstream name;
    name << "order " << c.order << " at (lp,lpp)=(" << c.lp << "," << c.lpp << ") predicted "
         << (predicted ? "converges" : "diverges");
    bool pass = probe.converged == predicted;
    double residual = std::min(std::abs(probe.case1_slope), std::abs(probe.case2_slope));
    suite.cases.push_back(VerifyCase{name.str(), residual, 0.0, pass});
    if (c.order == 0) {
      double expected = (c.lp + c.lpp) / 2.0;
      double dev = std::abs(probe.growth_exponent_fit - expected);
      std::ostringstream name2;
      name2 << "case-1 exponent fit at (lp,lpp)=(" << c.lp << "," << c.lpp << ")";
      suite.cases.push_back(VerifyCase{name2.str(), dev, 0.05, dev < 0.05});
    }
  }
  return suite;
}

VerifySuite suite_branch_tables(const SuiteConfig& cfg) {
  (void)cfg;
  VerifySuite suite;
  suite.identity = "branch_tables";

  // two-term decomposition for q'' = 1
  {
    auto rows = branching::branch_compact(4, 3, 1, 10);
    bool ok = rows.size() == 2 &&
              rows[0].left == branching::RepLabel::pi_plus({4, 3}, -HalfInt::half()) &&
              rows[0].right == branching::RepLabel::make_trivial() &&
              rows[1].left == branching::RepLabel::pi_plus({4, 3}, HalfInt::half()) &&
              rows[1].right == branching::RepLabel::make_sgn();
    suite.cases.push_back(VerifyCase{"q''=1 two-term decomposition", ok ? 0.0 : 1.0, 0.0, ok});
  }

  // decomposability criterion vs the associated-variety demo, p+q <= 10
  {
    bool ok = true;
    for (int p = 2; p <= 8; ++p)
      for (int q = 2; p + q <= 10; ++q) {
        if ((p + q) % 2 != 0) continue;
        for (int p1 = 0; p1 <= p; ++p1)
          for (int q1 = 0; q1 <= q; ++q1) {
            SignatureSplit split = make_split({p, q}, p1, q1, p - p1, q - q1);
            bool dd = branching::discretely_decomposable(split);
            if (split.min_part() > 0) {
              auto demo = branching::associated_variety_demo(split);
              bool obstructed = demo.x_in_variety && !demo.projections_nilpotent.first &&
                                !demo.projections_nilpotent.second;
              ok = ok && !dd && obstructed;
            } else {
              ok = ok && dd;
            }
          }
      }
    suite.cases.push_back(
        VerifyCase{"criterion matches the variety obstruction (p+q <= 10)", ok ? 0.0 : 1.0, 0.0,
                   ok});
  }

  // noncompact families empty exactly on the finite-discrete locus, p+q <= 12
  {
    bool ok = true;
    for (int p = 2; p <= 10; ++p)
      for (int q = 2; p + q <= 12; ++q) {
        if ((p + q) % 2 != 0 || (p == 2 && q == 2)) continue;
        for (int p1 = 0; p1 <= p; ++p1)
          for (int q1 = 0; q1 <= q; ++q1) {
            SignatureSplit split = make_split({p, q}, p1, q1, p - p1, q - q1);
            auto rows = branching::branch_noncompact_discrete(split, HalfInt(8));
            bool locus = std::min(split.p1, split.q2) <= 1 && std::min(split.q1, split.p2) <= 1;
            ok = ok && (rows.empty() == locus);
          }
      }
    suite.cases.push_back(VerifyCase{
        "discrete families empty exactly on the small locus (p+q <= 12)", ok ? 0.0 : 1.0, 0.0, ok});
  }
  return suite;
}

VerifySuite suite_classical_dims(const SuiteConfig& cfg) {
  (void)cfg;
  VerifySuite suite;
  suite.identity = "classical_dims";
  bool ok = true;
  for (int n = 0; n <= 10; ++n)
    for (int q1 = 1; q1 <= 6; ++q1)
      for (int q2 = 1; q2 <= 6; ++q2) {
        std::int64_t total = 0;
        for (auto [k, l] : harmonics::classical_branching(n, q1, q2))
          total += harmonics::dim_harmonic({k, q1}) * harmonics::dim_harmonic({l, q2});
        ok = ok && total == harmonics::dim_harmonic({n, q1 + q2});
      }
  suite.cases.push_back(
      VerifyCase{"dimension identity n <= 10, q', q'' <= 6", ok ? 0.0 : 1.0, 0.0, ok});
  return suite;
}

VerifySuite run_suite(const std::string& identity, const SuiteConfig& cfg) {
  if (identity == "msq") return suite_msq(cfg);
  if (identity == "v_pm") return suite_v_pm(cfg);
  if (identity == "v_pp") return suite_v_pp(cfg);
  if (identity == "triangular") return suite_triangular(cfg);
  if (identity == "lemma84") return suite_lemma84(cfg);
  if (identity == "parseval") return suite_parseval(cfg);
  if (identity == "eigen") return suite_eigen(cfg);
  if (identity == "conformal") return suite_conformal(cfg);
  if (identity == "boundary") return suite_boundary(cfg);
  if (identity == "branch_tables") return suite_branch_tables(cfg);
  if (identity == "classical_dims") return suite_classical_dims(cfg);
  raise(errc::invalid_parameter, "unknown verify identity '" + identity + "'");
}

}  // namespace minrep::suites
