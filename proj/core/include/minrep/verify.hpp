#pragma once

#include <optional>
#include <vector>

#include "minrep/halfint.hpp"
#include "minrep/quadrature.hpp"

namespace minrep::quadrature {

struct VerifyResult {
  double quadrature = 0;
  double exact = 0;
  double rel_err = 0;
};

// Quadrature of the half-line norm integral of the Jacobi function against
// the closed-form V^{+-}(lambda', lambda''; lambda); requires the lattice
// condition lambda' - lambda'' - lambda - 1 in 2N.
VerifyResult verify_v_pm(HalfInt lam_p, HalfInt lam_pp, HalfInt lam, double tol);

// Same for the compact-picture integral over (0, pi/2) against V^{++};
// requires lambda - lambda' - lambda'' - 1 in 2N.
VerifyResult verify_v_pp(HalfInt lam_p, HalfInt lam_pp, HalfInt lam, double tol);

struct NormReport {
  double pi_norm_sq = 0;
  std::optional<double> l2_norm_sq;  // present only for lambda > 0
  double lambda = 0;
};

struct KTypeData {
  int m = 0;
  int n = 0;
  double hm_norm_sq = 1;  // squared L^2(S^{p-1}) norm of the harmonic factor
  double hn_norm_sq = 1;
  HalfInt lambda;
};

// Norm on the K-type (m,n) of the lambda-eigenspace:
//   |f|^2 = |h_m|^2 |h_n|^2 * lambda * V^{+-}(m+(p-2)/2, n+(q-2)/2; lambda),
// evaluated exactly and converted; for lambda > 0 the L^2(X(p,q)) norm is
// also computed by radial quadrature.
NormReport pi_norm(const KTypeData& f, Signature sig);

// Norm squared of a kernel K-type H^m (x) H^n on S^{p-1} x S^{q-1}
// (requires m + p/2 = n + q/2; not_in_kernel otherwise):
//   (n + q/2 - 1) |h_m|^2 |h_n|^2.
double minrep_norm_sq(int m, int n, double hm_norm_sq, double hn_norm_sq, Signature sig);

// Evaluates both sides of the pull-back formula for a pure K'-type
// (m, k, l) on X(p,q') x S^{q''-1} over a theta-grid and returns the
// maximum relative deviation.
double lemma84_pullback_check(int m, int k, int l, int p, int q_prime, int q_doubleprime,
                              int grid_points = 50);

// Multi-term zonal test function: terms (n, coeff) stand for kernel
// K-types H^{n+(q-p)/2} (x) H^n with zonal representatives; the y-side pole
// is cos(alpha) e_{y'} + sin(alpha) e_{y''}, so alpha = 0 keeps the
// function independent of the O(q'') variables.
struct ParsevalSpec {
  std::vector<std::pair<int, double>> terms;
  double alpha = 0.6;
};

struct ParsevalTermReport {
  int l = 0;
  double contribution = 0;  // lambda_l * |G_l|^2 summed over K'-types
};

struct ParsevalReport {
  double lhs = 0;            // minrep-norm of the test function
  double rhs_partial = 0;    // explicit-coefficient route (l + q''/2 - 1) * L^2
  double rhs_pi_route = 0;   // route through the closed-form pi-norms
  double rel_err = 0;        // |lhs - rhs_partial| / lhs
  double rel_err_routes = 0; // |rhs_partial - rhs_pi_route| / rhs_partial
  double profile_residual = 0;  // worst mismatch against the radial profile
  std::vector<ParsevalTermReport> per_l;
};

ParsevalReport parseval_verify(int p, int q_prime, int q_doubleprime, const ParsevalSpec& spec,
                               int l_max, double tol);

struct ProbeConfig {
  double lp_epsilon = 0.4;  // the eps of L^{2-eps} probes
  int shells = 8;
  double shell_top_case1 = 0.2;
  double shell_top_case2 = 0.4;
  int quad_order = 12;
  double slope_margin = 0.04;
};

struct BoundaryProbeResult {
  bool converged = false;          // both strata
  double growth_exponent_fit = 0;  // pointwise exponent along the case-1 collar
  double case1_slope = 0;          // shell-mass slope; > 0 means convergent
  double case2_slope = 0;
};

// Integrates |D^order T+f|^s on shrinking collars at the two boundary
// strata of M+ for the synthetic product eigenfunction with decay
// parameters (lambda', lambda''), fits the shell-mass slopes, and reports
// the convergence verdict.  s is 2, 2-eps, 1 for order 0, 1, 2.
BoundaryProbeResult l2_boundary_probe(double lam_p, double lam_pp, const SignatureSplit& split,
                                      int derivative_order, const ProbeConfig& cfg = {});

}  // namespace minrep::quadrature
