#include "minrep/hyp2f1.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace minrep::specfun {

namespace {

constexpr double kIntTol = 1e-12;

bool is_nonpositive_integer(double x, long long* n = nullptr) {
  double r = std::round(x);
  if (x > 0.5 || std::abs(x - r) > kIntTol) return false;
  if (n) *n = static_cast<long long>(r);
  return true;
}

// Direct series with Kahan-compensated summation.  `terms` < 0 means run to
// the stopping rule; otherwise sum exactly `terms` terms (terminating case).
double series_2f1(double a, double b, double c, double z, long long terms,
                  const SeriesControl& ctl) {
  double sum = 1.0, comp = 0.0, term = 1.0;
  int quiet = 0;
  long long kmax = terms >= 0 ? terms : ctl.max_terms;
  for (long long k = 0; k < kmax; ++k) {
    double denom = (c + k) * (k + 1);
    if (denom == 0.0) raise(errc::pole_c, "2F1 series hit a non-positive integer c");
    term *= (a + k) * (b + k) / denom * z;
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (terms < 0) {
      if (std::abs(term) < ctl.rel_eps * std::abs(sum)) {
        if (++quiet >= ctl.streak) return sum;
      } else {
        quiet = 0;
      }
    }
  }
  if (terms < 0)
    raise(errc::no_convergence,
          "2F1 series did not converge within " + std::to_string(ctl.max_terms) + " terms");
  return sum;
}

}  // namespace

double gauss_2f1(const HypergeometricParams& p, double z, const SeriesControl& ctl) {
  const double a = p.a, b = p.b, c = p.c;
  if (z == 0.0) return 1.0;
  if (z >= 1.0) raise(errc::no_convergence, "2F1 argument z >= 1");

  long long na = 0, nb = 0;
  const bool term_a = is_nonpositive_integer(a, &na);
  const bool term_b = is_nonpositive_integer(b, &nb);
  if (term_a || term_b) {
    long long n = term_a && term_b ? std::min(-na, -nb) : (term_a ? -na : -nb);
    // A terminating numerator shields a non-positive c only if it cuts off first.
    long long nc = 0;
    if (is_nonpositive_integer(c, &nc) && -nc < n)
      raise(errc::pole_c, "2F1 with non-positive integer c not shielded by numerator");
    return series_2f1(a, b, c, z, n + 1, ctl);
  }
  if (is_nonpositive_integer(c)) raise(errc::pole_c, "2F1 with non-positive integer c");

  long long nca = 0, ncb = 0;
  if (is_nonpositive_integer(c - a, &nca) || is_nonpositive_integer(c - b, &ncb)) {
    // Euler transform terminates: 2F1(c-a, c-b; c; z) has a non-positive
    // integer numerator parameter.
    double v = series_2f1(c - a, c - b, c,
                          z, (is_nonpositive_integer(c - a, &nca) ? -nca : -ncb) + 1, ctl);
    return std::pow(1.0 - z, c - a - b) * v;
  }

  if (z < 0.0) {
    double w = z / (z - 1.0);  // in (0, 1)
    if (w > 1.0 - ctl.argument_margin)
      raise(errc::no_convergence, "Pfaff-transformed argument too close to 1");
    return std::pow(1.0 - z, -a) * series_2f1(a, c - b, c, w, -1, ctl);
  }
  if (z > 1.0 - ctl.argument_margin)
    raise(errc::no_convergence, "2F1 argument too close to 1");
  return series_2f1(a, b, c, z, -1, ctl);
}

}  // namespace minrep::specfun
