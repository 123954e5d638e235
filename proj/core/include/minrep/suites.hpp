#pragma once

#include <cstdint>
#include <string>

#include "minrep/report.hpp"

namespace minrep::suites {

// Shared knobs of the verification suites.  Every tolerance is pinned here;
// the CLI config can override seeds and formats but the identity thresholds
// are part of the contract.
struct SuiteConfig {
  std::uint64_t seed = 2024;
  HalfInt grid_cap = HalfInt::from_twice(9);  // lambda, lambda', lambda'' <= 9/2
  int parseval_p = 4;
  int parseval_q_prime = 1;
  int parseval_q_doubleprime = 3;
  double tol_v_quadrature = 1e-8;
  double tol_triangular = 1e-10;
  double tol_lemma84 = 1e-9;
  double tol_parseval = 1e-6;
  double tol_parseval_routes = 1e-8;
  double tol_eigen_residual = 1e-7;
  double tol_decay_rate = 0.01;
  double tol_roundtrip = 1e-12;
  double tol_conformal = 1e-6;
  int conformal_points = 100;
  int roundtrip_points = 1000;
};

// Exact identity lambda' V^{++} = M^2 lambda V^{+-} over the admissible
// half-integer grid; zero-error comparisons in exact arithmetic.
report::VerifySuite suite_msq(const SuiteConfig& cfg = {});

// Quadrature of the two norm integrals against the closed forms.
report::VerifySuite suite_v_pm(const SuiteConfig& cfg = {});
report::VerifySuite suite_v_pp(const SuiteConfig& cfg = {});

// Triangular relation of the Jacobi function on the admissible grid.
report::VerifySuite suite_triangular(const SuiteConfig& cfg = {});

// Pull-back formula for pure K'-types.
report::VerifySuite suite_lemma84(const SuiteConfig& cfg = {});

// Parseval identity for (p,q) = (4,4), (q',q'') = (1,3).
report::VerifySuite suite_parseval(const SuiteConfig& cfg = {});

// Radial eigen-equation residuals and decay-rate fits on a 20-case grid.
report::VerifySuite suite_eigen(const SuiteConfig& cfg = {});

// Conformal round trips and the conformal-factor law.
report::VerifySuite suite_conformal(const SuiteConfig& cfg = {});

// Boundary integrability probes against the exponent flags (12 cases).
report::VerifySuite suite_boundary(const SuiteConfig& cfg = {});

// Branching tables: the two-term decomposition, the decomposability
// criterion against the associated-variety demo (p+q <= 10), and emptiness
// of the noncompact discrete families exactly on its locus (p+q <= 12).
report::VerifySuite suite_branch_tables(const SuiteConfig& cfg = {});

// Classical branching dimension identity, n <= 10, q', q'' <= 6.
report::VerifySuite suite_classical_dims(const SuiteConfig& cfg = {});

// Lookup by CLI name ("msq", "v_pm", ...); invalid_parameter on unknown.
report::VerifySuite run_suite(const std::string& identity, const SuiteConfig& cfg = {});

}  // namespace minrep::suites
