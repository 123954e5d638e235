#include "minrep/verify.hpp"

#include <cmath>

#include "minrep/geometry.hpp"
#include "minrep/harmonics.hpp"
#include "minrep/jacobi.hpp"
#include "minrep/operators.hpp"
#include "minrep/param_sets.hpp"

namespace minrep::quadrature {

namespace {

bool in_two_n(HalfInt d) { return d.is_integer() && d.integer() >= 0 && d.integer() % 2 == 0; }

// 1-D reduction of \int_{S^{q-1}} f(<x, axis>) dx.
struct ZonalRule {
  std::vector<double> nodes;    // values of <x, axis>
  std::vector<double> weights;  // include the transverse sphere volume

  double integrate(const std::function<double(double)>& f) const {
    double s = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

ZonalRule zonal_rule(int q, int order) {
  ZonalRule rule;
  if (q == 1) {
    rule.nodes = {1.0, -1.0};
    rule.weights = {1.0, 1.0};
    return rule;
  }
  std::vector<double> gl_x, gl_w;
  gauss_legendre(order, gl_x, gl_w);
  double transverse = q >= 3 ? harmonics::sphere_volume(q - 1) : 2.0;
  for (int i = 0; i < order; ++i) {
    double psi = 0.5 * M_PI * (gl_x[i] + 1.0);
    rule.nodes.push_back(std::cos(psi));
    rule.weights.push_back(transverse * 0.5 * M_PI * gl_w[i] * std::pow(std::sin(psi), q - 2));
  }
  return rule;
}

// Fixed composite Gauss-Legendre panels on [0, T]; deterministic schedule.
double integrate_panels(const std::function<double(double)>& f, double T, int panels, int order) {
  std::vector<double> gl_x, gl_w;
  gauss_legendre(order, gl_x, gl_w);
  double h = T / panels, sum = 0;
  for (int p = 0; p < panels; ++p) {
    double a = p * h;
    for (int i = 0; i < order; ++i)
      sum += 0.5 * h * gl_w[i] * f(a + 0.5 * h * (gl_x[i] + 1.0));
  }
  return sum;
}

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double n = xs.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

VerifyResult verify_v_pm(HalfInt lam_p, HalfInt lam_pp, HalfInt lam, double tol) {
  if (!in_two_n(lam_p - lam_pp - lam - HalfInt(1)))
    raise(errc::invalid_parameter, "verify_v_pm needs lambda' - lambda'' - lambda - 1 in 2N");
  specfun::JacobiFunctionSpec spec{lam.value(), lam_p.value(), lam_pp.value()};
  auto integrand = [&](double t) {
    double phi = specfun::jacobi_phi(spec, t);
    return phi * phi * std::pow(std::cosh(t), 2 * lam_p.value() + 1) *
           std::pow(std::sinh(t), 2 * lam_pp.value() + 1);
  };
  IntegrateOptions opts;
  opts.tol = tol * 1e-2;
  QuadratureResult quad = integrate_half_line(integrand, 2 * lam.value(), opts);
  double exact = exact::v_constant_exact(exact::VKind::pm, lam_p, lam_pp, lam).to_double();
  return VerifyResult{quad.value, exact, std::abs(quad.value - exact) / std::abs(exact)};
}

VerifyResult verify_v_pp(HalfInt lam_p, HalfInt lam_pp, HalfInt lam, double tol) {
  if (!in_two_n(lam - lam_p - lam_pp - HalfInt(1)))
    raise(errc::invalid_parameter, "verify_v_pp needs lambda - lambda' - lambda'' - 1 in 2N");
  specfun::JacobiFunctionSpec spec{lam.value(), lam_p.value(), lam_pp.value()};
  auto integrand = [&](double th) {
    double phi = specfun::jacobi_phi_imag(spec, th);
    return phi * phi * std::pow(std::cos(th), 2 * lam_p.value() + 1) *
           std::pow(std::sin(th), 2 * lam_pp.value() + 1);
  };
  IntegrateOptions opts;
  opts.tol = tol * 1e-2;
  QuadratureResult quad = integrate_interval(integrand, 0.0, M_PI / 2, opts);
  double exact = exact::v_constant_exact(exact::VKind::pp, lam_p, lam_pp, lam).to_double();
  return VerifyResult{quad.value, exact, std::abs(quad.value - exact) / std::abs(exact)};
}

NormReport pi_norm(const KTypeData& f, Signature sig) {
  HalfInt lam_p = HalfInt::from_twice(2 * f.m + sig.p - 2);
  HalfInt lam_pp = HalfInt::from_twice(2 * f.n + sig.q - 2);
  NormReport out;
  out.lambda = f.lambda.value();
  // lambda * V^{+-} as a single exact product; finite at lambda = 0
  out.pi_norm_sq =
      f.hm_norm_sq * f.hn_norm_sq * exact::lambda_v_pm(lam_p, lam_pp, f.lambda).to_double();
  if (f.lambda > HalfInt(0)) {
    auto radial = [&](double t) {
      double u = operators::radial_profile(f.m, f.n, sig, f.lambda.value(), t);
      return u * u * std::pow(std::cosh(t), sig.p - 1) * std::pow(std::sinh(t), sig.q - 1);
    };
    IntegrateOptions opts;
    opts.tol = 1e-10;
    out.l2_norm_sq =
        f.hm_norm_sq * f.hn_norm_sq * integrate_half_line(radial, 2 * f.lambda.value(), opts).value;
  }
  return out;
}

double minrep_norm_sq(int m, int n, double hm_norm_sq, double hn_norm_sq, Signature sig) {
  if (2 * (m - n) != sig.q - sig.p)
    raise(errc::not_in_kernel, "K-type (m,n) does not satisfy m + p/2 = n + q/2");
  double coeff = n + sig.q / 2.0 - 1.0;
  return coeff * hm_norm_sq * hn_norm_sq;
}

double lemma84_pullback_check(int m, int k, int l, int p, int q_prime, int q_doubleprime,
                              int grid_points) {
  const int q = q_prime + q_doubleprime;
  if ((p + q) % 2 != 0 || q_prime < 1 || q_doubleprime < 1)
    raise(errc::hypothesis_violated, "needs p+q even and q', q'' >= 1");
  const int n = m + (q - p) / 2;  // kernel partner degree
  const int j2 = n - k - l;       // twice the lattice exponent
  if (n < 0 || j2 < 0 || j2 % 2 != 0)
    raise(errc::invalid_parameter, "(m,k,l) is not a K'-type of the kernel K-type (m,n)");

  const double lam = l + q_doubleprime / 2.0 - 1.0;
  const double lam_p = m + p / 2.0 - 1.0;
  const double lam_pp = k + q_prime / 2.0 - 1.0;
  HalfInt lamH = HalfInt::from_twice(2 * l + q_doubleprime - 2);
  HalfInt lam_pH = HalfInt::from_twice(2 * m + p - 2);
  HalfInt lam_ppH = HalfInt::from_twice(2 * k + q_prime - 2);
  const double M = exact::m_constant_exact(lamH, lam_pH, lam_ppH).to_double();

  // both sides at h_m = h_k = h_l = 1 (pole values); the harmonic factors
  // cancel in the ratio of the two displays
  double worst = 0;
  for (int i = 1; i <= grid_points; ++i) {
    double theta = 0.1 + (1.4 - 0.1) * (i - 1) / (grid_points - 1);
    double ch = 1.0 / std::sin(theta);         // cosh t
    double t = std::acosh(ch);
    // left: twisted inverse pull-back of the K'-type eigenfunction
    double weight = std::pow(ch, (p + q - 4) / 2.0);
    double f_val = std::pow(std::cosh(t), m) * std::pow(std::sinh(t), k) *
                   specfun::jacobi_phi({lam, lam_p, lam_pp}, t);
    double lhs = weight * f_val;
    // right: the (m,k,l) display on the compact side; the first superscript
    // slot of phi_{i lambda'}^{(lambda, lambda'')} carries lambda
    double rhs = (1.0 / M) * std::pow(std::cos(theta), k) * std::pow(std::sin(theta), l) *
                 specfun::jacobi_phi_imag({lam_p, lam_pp, lam}, theta);
    double dev = std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    worst = std::max(worst, dev);
  }
  return worst;
}

namespace {

struct ParsevalWorkspace {
  int p, q_prime, q_doubleprime, q;
  ParsevalSpec spec;
  ZonalRule rule_omega;   // S^{p-1} against the x pole
  ZonalRule rule_eta_p;   // S^{q'-1} against the y' pole component
  ZonalRule rule_eta_pp;  // S^{q''-1} against the y'' pole component

  // Pull-back of the test function in the coordinates
  // (c_omega, c_eta', t, c_eta''), all inner products against the poles.
  double pullback(double c_omega, double c_eta_p, double t, double c_eta_pp) const {
    double th = std::tanh(t), sech = 1.0 / std::cosh(t);
    double weight = std::pow(std::cosh(t), -(p + q - 4) / 2.0);
    double v_dot_pole = std::cos(spec.alpha) * th * c_eta_p + std::sin(spec.alpha) * sech * c_eta_pp;
    double sum = 0;
    for (auto [n, coeff] : spec.terms) {
      int m = n + (q - p) / 2;
      sum += coeff * harmonics::zonal_kernel(m, p, c_omega) *
             harmonics::zonal_kernel(n, q, v_dot_pole);
    }
    return weight * sum;
  }

  // Coefficient of the degree-l zonal harmonic in c_eta''.
  double project_l(int l, double c_omega, double c_eta_p, double t, double zl_norm_sq) const {
    double num = rule_eta_pp.integrate([&](double c) {
      return pullback(c_omega, c_eta_p, t, c) *
             harmonics::zonal_kernel(l, q_doubleprime, c);
    });
    return num / zl_norm_sq;
  }
};

}  // namespace

ParsevalReport parseval_verify(int p, int q_prime, int q_doubleprime, const ParsevalSpec& spec,
                               int l_max, double tol) {
  const int q = q_prime + q_doubleprime;
  // q'' >= 3 keeps every lambda_l = l + q''/2 - 1 positive, so the L^2
  // route of the pi-norms is available for all summands
  if ((p + q) % 2 != 0 || q_prime < 1 || q_doubleprime < 3)
    raise(errc::hypothesis_violated, "parseval_verify needs p+q even, q' >= 1, q'' >= 3");
  for (auto [n, coeff] : spec.terms) {
    (void)coeff;
    if (n + (q - p) / 2 < 0)
      raise(errc::invalid_parameter, "term degree has no kernel partner");
  }

  const int order = 24;
  ParsevalWorkspace ws{p,
                       q_prime,
                       q_doubleprime,
                       q,
                       spec,
                       zonal_rule(p, order),
                       zonal_rule(q_prime, order),
                       zonal_rule(q_doubleprime, order)};

  ParsevalReport report;

  // Left side: orthogonal sum of the kernel K-type norms.
  for (auto [n, coeff] : spec.terms) {
    int m = n + (q - p) / 2;
    double hm2 = ws.rule_omega.integrate(
        [&](double c) { double z = harmonics::zonal_kernel(m, p, c); return z * z; });
    double hn2 = zonal_rule(q, order).integrate(
        [&](double c) { double z = harmonics::zonal_kernel(n, q, c); return z * z; });
    report.lhs += coeff * coeff * minrep_norm_sq(m, n, hm2, hn2, Signature{p, q});
  }

  // Right side, both routes, one l at a time.
  for (int l = 0; l <= l_max; ++l) {
    const double lam_l = l + q_doubleprime / 2.0 - 1.0;
    const HalfInt lam_lH = HalfInt::from_twice(2 * l + q_doubleprime - 2);
    double zl2 = ws.rule_eta_pp.integrate([&](double c) {
      double z = harmonics::zonal_kernel(l, q_doubleprime, c);
      return z * z;
    });

    const double T = std::max(14.0, -std::log(1e-14) / std::max(2 * lam_l, 0.5));
    const int panels = static_cast<int>(T) + 2;

    // explicit-coefficient route: lambda_l * |G_l|^2_{L^2(X x S)}
    double x_l2 = ws.rule_omega.integrate([&](double c_omega) {
      return ws.rule_eta_p.integrate([&](double c_eta_p) {
        return integrate_panels(
            [&](double t) {
              double g = ws.project_l(l, c_omega, c_eta_p, t, zl2);
              return g * g * std::pow(std::cosh(t), p - 1) * std::pow(std::sinh(t), q_prime - 1);
            },
            T, panels, 16);
      });
    });
    double contribution = lam_l * x_l2 * zl2;
    report.per_l.push_back({l, contribution});
    report.rhs_partial += contribution;

    // pi-norm route: project each term onto (m, k) K'-types, match the
    // radial profile, and use the closed-form norm constants.
    for (auto [n, coeff] : spec.terms) {
      (void)coeff;
      int m = n + (q - p) / 2;
      double hm2 = ws.rule_omega.integrate(
          [&](double c) { double z = harmonics::zonal_kernel(m, p, c); return z * z; });
      for (int k = 0; k <= n - l; ++k) {
        if ((n - k - l) % 2 != 0) continue;
        if (q_prime == 1 && k > 1) continue;
        double zk2 = ws.rule_eta_p.integrate([&](double c) {
          double z = harmonics::zonal_kernel(k, q_prime, c);
          return z * z;
        });
        // radial coefficient of the (m,k) component of term n at l
        auto w_mk = [&](double t) {
          double num = ws.rule_omega.integrate([&](double c_omega) {
            return harmonics::zonal_kernel(m, p, c_omega) *
                   ws.rule_eta_p.integrate([&](double c_eta_p) {
                     return harmonics::zonal_kernel(k, q_prime, c_eta_p) *
                            ws.project_l(l, c_omega, c_eta_p, t, zl2);
                   });
          });
          return num / (hm2 * zk2);
        };
        const double lam_p_d = m + p / 2.0 - 1.0;
        const double lam_pp_d = k + q_prime / 2.0 - 1.0;
        auto profile = [&](double t) {
          return std::pow(std::cosh(t), m) * std::pow(std::sinh(t), k) *
                 specfun::jacobi_phi({lam_l, lam_p_d, lam_pp_d}, t);
        };
        double t0 = 0.7;
        double c_prof = w_mk(t0) / profile(t0);
        for (double t : {0.3, 1.1, 1.9}) {
          double wv = w_mk(t), pv = c_prof * profile(t);
          double dev = std::abs(wv - pv) / std::max({std::abs(wv), std::abs(pv), 1e-12});
          report.profile_residual = std::max(report.profile_residual, dev);
        }
        HalfInt lam_pH = HalfInt::from_twice(2 * m + p - 2);
        HalfInt lam_ppH = HalfInt::from_twice(2 * k + q_prime - 2);
        double lamV = exact::lambda_v_pm(lam_pH, lam_ppH, lam_lH).to_double();
        report.rhs_pi_route += c_prof * c_prof * hm2 * zk2 * lamV * zl2;
      }
    }
  }

  int max_n = 0;
  for (auto [n, coeff] : spec.terms) max_n = std::max(max_n, n);
  if (l_max < max_n && !report.per_l.empty() &&
      std::abs(report.per_l.back().contribution) > tol * std::abs(report.rhs_partial))
    raise(errc::truncation_insufficient, "the l-sum was cut while terms still carry mass");

  report.rel_err = std::abs(report.lhs - report.rhs_partial) / std::abs(report.lhs);
  report.rel_err_routes =
      std::abs(report.rhs_partial - report.rhs_pi_route) / std::abs(report.rhs_partial);
  if (report.rel_err > tol)
    raise(errc::tolerance_not_met, "Parseval identity missed the requested tolerance");
  return report;
}

namespace {

// Synthetic product eigenfunction with the exact leading powers of the
// boundary analysis.
geometry::HypProductFunction synthetic_product_function(double lam_p, double lam_pp,
                                                        const SignatureSplit& split) {
  double e1 = -(2 * lam_p + split.p1 + split.q1 - 2) / 4.0;
  double e2 = -(2 * lam_pp + split.p2 + split.q2 - 2) / 4.0;
  return geometry::HypProductFunction{
      split, [e1, e2](const geometry::HyperboloidPoint& a, const geometry::HyperboloidPoint& b) {
        double s1 = geometry::norm_sq(a.x) + geometry::norm_sq(a.y);
        double s2 = geometry::norm_sq(b.x) + geometry::norm_sq(b.y);
        return std::pow(s1, e1) * std::pow(s2, e2);
      }};
}

geometry::Vec axis(int dim) {
  geometry::Vec v(dim, 0.0);
  if (dim > 0) v[0] = 1.0;
  return v;
}

}  // namespace

BoundaryProbeResult l2_boundary_probe(double lam_p, double lam_pp, const SignatureSplit& split,
                                      int derivative_order, const ProbeConfig& cfg) {
  if (split.min_part() < 1)
    raise(errc::invalid_parameter, "the probe needs all four split parts nonzero");
  if (derivative_order < 0 || derivative_order > 2)
    raise(errc::invalid_parameter, "derivative order must be 0, 1 or 2");

  const double s_exp = derivative_order == 0 ? 2.0
                       : derivative_order == 1 ? 2.0 - cfg.lp_epsilon
                                               : 1.0;
  geometry::SphereFunction tpf =
      geometry::t_plus_extend(synthetic_product_function(lam_p, lam_pp, split));

  geometry::AngularChart chart;
  chart.split = split;
  chart.omega_p = axis(split.p1);
  chart.omega_pp = axis(split.p2);
  chart.eta_p = axis(split.q1);
  chart.eta_pp = axis(split.q2);

  auto eval_angular = [&](double theta, double phi) {
    geometry::AngularChart c = chart;
    c.theta = theta;
    c.phi = phi;
    return tpf.f(geometry::angular_chart_to_point(c));
  };

  const double phi0 = 1.0;
  // collar coordinate w = cos^2(theta) - cos^2(phi) at fixed phi
  auto theta_of = [](double w, double phi) {
    return std::acos(std::sqrt(std::cos(phi) * std::cos(phi) + w));
  };

  // |d^k/dtheta^k T+f| at collar coordinate w, steps scaled to the collar
  auto deriv_case1 = [&](double w, double phi) {
    double theta = theta_of(w, phi);
    if (derivative_order == 0) return std::abs(eval_angular(theta, phi));
    double h = 0.02 * w / std::abs(std::sin(2 * theta));
    if (derivative_order == 1)
      return std::abs((eval_angular(theta + h, phi) - eval_angular(theta - h, phi)) / (2 * h));
    return std::abs((eval_angular(theta + h, phi) - 2 * eval_angular(theta, phi) +
                     eval_angular(theta - h, phi)) /
                    (h * h));
  };

  std::vector<double> gl_x, gl_w;
  gauss_legendre(cfg.quad_order, gl_x, gl_w);

  std::vector<double> log_delta, log_mass;
  for (int j = 0; j < cfg.shells; ++j) {
    double hi = cfg.shell_top_case1 * std::pow(2.0, -j);
    double lo = hi / 2;
    double mass = 0;
    for (int a = 0; a < cfg.quad_order; ++a) {
      double w = lo + (hi - lo) * 0.5 * (gl_x[a] + 1.0);
      double wq = (hi - lo) * 0.5 * gl_w[a];
      for (int b = 0; b < cfg.quad_order; ++b) {
        double phi = phi0 - 0.1 + 0.2 * 0.5 * (gl_x[b] + 1.0);
        double pq = 0.2 * 0.5 * gl_w[b];
        geometry::AngularChart c = chart;
        c.theta = theta_of(w, phi);
        c.phi = phi;
        double d = deriv_case1(w, phi);
        mass += wq * pq * std::pow(d, s_exp) * geometry::angular_volume_weight(c) /
                std::abs(std::sin(2 * c.theta));  // dw = |sin 2theta| dtheta
      }
    }
    if (mass <= 0) continue;
    log_delta.push_back(std::log(hi));
    log_mass.push_back(std::log(mass));
  }
  double slope1 = least_squares_slope(log_delta, log_mass);

  // pointwise exponent of the probed quantity along the transversal
  std::vector<double> lw, lv;
  for (int j = 0; j < cfg.shells; ++j) {
    double w = cfg.shell_top_case1 * std::pow(2.0, -j);
    double d = deriv_case1(w, phi0);
    if (d <= 0) continue;
    lw.push_back(std::log(w));
    lv.push_back(std::log(d));
  }
  double exponent_fit = least_squares_slope(lw, lv) + derivative_order;

  // Case 2: polar collar around cos theta = cos phi = 0.
  geometry::PolarChart pc;
  pc.split = split;
  pc.omega_p = axis(split.p1);
  pc.omega_pp = axis(split.p2);
  pc.eta_p = axis(split.q1);
  pc.eta_pp = axis(split.q2);

  auto eval_polar = [&](double r, double psi) {
    geometry::PolarChart c = pc;
    c.r = r;
    c.psi = psi;
    return tpf.f(geometry::polar_chart_to_point(c));
  };
  auto deriv_case2 = [&](double r, double psi) {
    if (derivative_order == 0) return std::abs(eval_polar(r, psi));
    double hr = 0.02 * r, hp = 0.02;
    if (derivative_order == 1) {
      double dr = (eval_polar(r + hr, psi) - eval_polar(r - hr, psi)) / (2 * hr);
      double dpsi = (eval_polar(r, psi + hp) - eval_polar(r, psi - hp)) / (2 * hp) / r;
      return std::max(std::abs(dr), std::abs(dpsi));
    }
    double drr = (eval_polar(r + hr, psi) - 2 * eval_polar(r, psi) + eval_polar(r - hr, psi)) /
                 (hr * hr);
    double dpp = (eval_polar(r, psi + hp) - 2 * eval_polar(r, psi) + eval_polar(r, psi - hp)) /
                 (hp * hp) / (r * r);
    return std::max(std::abs(drr), std::abs(dpp));
  };

  log_delta.clear();
  log_mass.clear();
  for (int j = 0; j < cfg.shells; ++j) {
    double hi = cfg.shell_top_case2 * std::pow(2.0, -j);
    double lo = hi / 2;
    double mass = 0;
    for (int a = 0; a < cfg.quad_order; ++a) {
      double r = lo + (hi - lo) * 0.5 * (gl_x[a] + 1.0);
      double rq = (hi - lo) * 0.5 * gl_w[a];
      for (int b = 0; b < cfg.quad_order; ++b) {
        double psi = -M_PI / 8 + (M_PI / 4) * 0.5 * (gl_x[b] + 1.0);
        double pq = (M_PI / 4) * 0.5 * gl_w[b];
        geometry::PolarChart c = pc;
        c.r = r;
        c.psi = psi;
        double d = deriv_case2(r, psi);
        mass += rq * pq * std::pow(d, s_exp) * geometry::polar_volume_weight(c);
      }
    }
    if (mass <= 0) continue;
    log_delta.push_back(std::log(hi));
    log_mass.push_back(std::log(mass));
  }
  double slope2 = least_squares_slope(log_delta, log_mass);

  BoundaryProbeResult out;
  out.case1_slope = slope1;
  out.case2_slope = slope2;
  out.growth_exponent_fit = exponent_fit;
  out.converged = slope1 > cfg.slope_margin && slope2 > cfg.slope_margin;
  return out;
}

}  // namespace minrep::quadrature
