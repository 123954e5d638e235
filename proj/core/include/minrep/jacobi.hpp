#pragma once

#include "minrep/hyp2f1.hpp"

namespace minrep::specfun {

// Parameters of the Jacobi function
//
//   phi_{i lam}^{(lam_pp, lam_p)}(t)
//     = 2F1((lam_p+lam_pp+1-lam)/2, (lam_p+lam_pp+1+lam)/2; lam_pp+1; -sinh^2 t).
//
// Caution: the FIRST superscript slot is lam_pp and the SECOND is lam_p.
// The triangular relation breaks under a swap, and the tests rely on that
// to pin the order.
struct JacobiFunctionSpec {
  double lam = 0;     // spectral parameter
  double lam_p = 0;   // second superscript slot (lambda')
  double lam_pp = 0;  // first superscript slot (lambda'')
};

HypergeometricParams jacobi_params(const JacobiFunctionSpec& spec);

// phi on the real axis; phi(0) = 1 exactly.
double jacobi_phi(const JacobiFunctionSpec& spec, double t);

// phi(i*theta) for 0 <= theta < pi/2, computed at argument sin^2(theta).
// Raises argument_near_one when theta is too close to pi/2 for the series.
double jacobi_phi_imag(const JacobiFunctionSpec& spec, double theta);

struct DecayFitWindow {
  double t_start = 8.0;
  double t_width = 4.0;
  int points = 25;
  double max_fit_residual = 1e-3;  // rms residual of the linear fit in log space
};

struct DecayFit {
  double fitted_rate = 0;    // slope of log|f| vs t
  double coefficient = 0;    // exp(intercept)
};

// Fits the exponential decay rate of f(t) = cosh(t)^m sinh(t)^n phi(t) on a
// late-time window.  For spectral parameter lam > 0 and the parameter
// lattice (lam_p - lam_pp - lam - 1) in 2N, the rate is -(lam + rho) with
// rho = (p+q-2)/2 baked into lam_p = m+p/2-1, lam_pp = n+q/2-1.  Raises
// window_too_noisy when the window is not in the asymptotic regime.
DecayFit asymptotic_decay_check(const JacobiFunctionSpec& spec, double rho, int m, int n,
                                const DecayFitWindow& window = {});

}  // namespace minrep::specfun
