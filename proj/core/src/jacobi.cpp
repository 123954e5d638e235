#include "minrep/jacobi.hpp"

#include <cmath>
#include <vector>

namespace minrep::specfun {

HypergeometricParams jacobi_params(const JacobiFunctionSpec& spec) {
  return HypergeometricParams{(spec.lam_p + spec.lam_pp + 1 - spec.lam) / 2,
                              (spec.lam_p + spec.lam_pp + 1 + spec.lam) / 2,
                              spec.lam_pp + 1};
}

double jacobi_phi(const JacobiFunctionSpec& spec, double t) {
  if (t == 0.0) return 1.0;
  double sh = std::sinh(t);
  return gauss_2f1(jacobi_params(spec), -sh * sh);
}

double jacobi_phi_imag(const JacobiFunctionSpec& spec, double theta) {
  if (theta == 0.0) return 1.0;
  double s = std::sin(theta);
  try {
    return gauss_2f1(jacobi_params(spec), s * s);
  } catch (const Error& e) {
    if (e.code() == errc::no_convergence)
      raise(errc::argument_near_one, "theta too close to pi/2 for the 2F1 series");
    throw;
  }
}

DecayFit asymptotic_decay_check(const JacobiFunctionSpec& spec, double rho, int m, int n,
                                const DecayFitWindow& window) {
  if (spec.lam <= 0)
    raise(errc::invalid_parameter, "decay fit needs the decaying branch lambda > 0");
  if (std::abs(m + n + rho - (spec.lam_p + spec.lam_pp + 1)) > 1e-9)
    raise(errc::invalid_parameter, "rho is inconsistent with the ansatz parameters");
  // the -(lambda+rho) asymptotics holds on the K-type lattice
  double j2 = spec.lam_p - spec.lam_pp - spec.lam - 1;
  double j2r = std::round(j2 / 2) * 2;
  if (std::abs(j2 - j2r) > 1e-9 || j2r < 0)
    raise(errc::invalid_parameter,
          "decay fit needs lambda' - lambda'' - lambda - 1 in 2N");
  std::vector<double> ts, logs;
  for (int i = 0; i < window.points; ++i) {
    double t = window.t_start + window.t_width * i / (window.points - 1);
    double phi = jacobi_phi(spec, t);
    double f = std::pow(std::cosh(t), m) * std::pow(std::sinh(t), n) * phi;
    if (f == 0.0 || !std::isfinite(f))
      raise(errc::window_too_noisy, "ansatz under/overflowed on the fit window");
    ts.push_back(t);
    logs.push_back(std::log(std::abs(f)));
  }
  // least-squares line log|f| = rate * t + intercept
  double N = ts.size(), st = 0, sl = 0, stt = 0, stl = 0;
  for (size_t i = 0; i < ts.size(); ++i) {
    st += ts[i];
    sl += logs[i];
    stt += ts[i] * ts[i];
    stl += ts[i] * logs[i];
  }
  double rate = (N * stl - st * sl) / (N * stt - st * st);
  double intercept = (sl - rate * st) / N;
  double rss = 0;
  for (size_t i = 0; i < ts.size(); ++i) {
    double r = logs[i] - (rate * ts[i] + intercept);
    rss += r * r;
  }
  if (std::sqrt(rss / N) > window.max_fit_residual)
    raise(errc::window_too_noisy, "log-linear fit residual above threshold");
  return DecayFit{rate, std::exp(intercept)};
}

}  // namespace minrep::specfun
