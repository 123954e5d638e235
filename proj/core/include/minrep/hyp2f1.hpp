#pragma once

#include "minrep/error.hpp"

namespace minrep::specfun {

struct HypergeometricParams {
  double a = 0;
  double b = 0;
  double c = 0;
};

struct SeriesControl {
  // stop once |term|/|partial sum| < rel_eps for `streak` consecutive terms
  double rel_eps = 1e-16;
  int streak = 3;
  int max_terms = 10000;
  double argument_margin = 1e-6;  // reject series arguments > 1 - margin
};

// Gauss hypergeometric function 2F1(a, b; c; z) on the real line, z < 1.
//
// Evaluation routes, in order:
//   1. a or b a non-positive integer: terminating series (any z).
//   2. c-a or c-b a non-positive integer: Euler transform
//      (1-z)^{c-a-b} 2F1(c-a, c-b; c; z), which terminates (any z < 1).
//   3. z < 0: Pfaff transform (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)); the
//      transformed argument lies in [0, 1).
//   4. 0 <= z < 1: direct series.
// Series arguments within `argument_margin` of 1 raise no_convergence;
// c in {0,-1,-2,...} raises pole_c unless a terminating numerator parameter
// cuts the series off before the offending denominator term.
double gauss_2f1(const HypergeometricParams& p, double z, const SeriesControl& ctl = {});

}  // namespace minrep::specfun
