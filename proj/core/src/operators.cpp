#include "minrep/operators.hpp"

#include <cmath>

#include "minrep/harmonics.hpp"
#include "minrep/jacobi.hpp"

namespace minrep::operators {

double yamabe_shift(Signature sig) {
  int n = sig.p + sig.q;
  return 0.25 * (n - 1) * (n - 3);
}

double laplace_eigenvalue(Signature sig, double lam) {
  double rho = (sig.p + sig.q - 2) / 2.0;
  return -lam * lam + rho * rho;
}

double radial_profile(int m, int n, Signature sig, double lam, double t) {
  specfun::JacobiFunctionSpec spec{lam, m + sig.p / 2.0 - 1.0, n + sig.q / 2.0 - 1.0};
  return std::pow(std::cosh(t), m) * std::pow(std::sinh(t), n) * specfun::jacobi_phi(spec, t);
}

double RadialAnsatz::operator()(const geometry::HyperboloidPoint& pt) const {
  if (pt.sig != sig) raise(errc::signature_mismatch, "ansatz evaluated on the wrong hyperboloid");
  double ch = std::sqrt(geometry::norm_sq(pt.x));  // cosh t
  double sh = std::sqrt(geometry::norm_sq(pt.y));  // sinh t >= 0
  double t = std::asinh(sh);
  double hm = harmonics::zonal_kernel(m, sig.p, geometry::dot(pt.x, x_pole) / ch);
  double hn = 1.0;
  if (sh > 0) {
    hn = harmonics::zonal_kernel(n, sig.q, geometry::dot(pt.y, y_pole) / sh);
  } else if (n > 0) {
    return 0.0;  // sinh^n factor vanishes at t = 0
  }
  return hm * hn * radial_profile(m, n, sig, lam, t);
}

RadialAnsatz radial_ansatz(int m, int n, Signature sig, double lam, geometry::Vec x_pole,
                           geometry::Vec y_pole) {
  if (static_cast<int>(x_pole.size()) != sig.p || static_cast<int>(y_pole.size()) != sig.q)
    raise(errc::signature_mismatch, "pole axes do not match the signature");
  return RadialAnsatz{m, n, sig, lam, std::move(x_pole), std::move(y_pole)};
}

double apply_radial_laplacian(int m, int n, Signature sig, const std::function<double(double)>& u,
                              double t, double h) {
  // 5-point central stencils
  double um2 = u(t - 2 * h), um1 = u(t - h), u0 = u(t), up1 = u(t + h), up2 = u(t + 2 * h);
  double d1 = (um2 - 8 * um1 + 8 * up1 - up2) / (12 * h);
  double d2 = (-um2 + 16 * um1 - 30 * u0 + 16 * up1 - up2) / (12 * h * h);
  double th = std::tanh(t), cth = 1.0 / th;
  double sech2 = 1.0 / (std::cosh(t) * std::cosh(t));
  double csch2 = 1.0 / (std::sinh(t) * std::sinh(t));
  double radial = -d2 - ((sig.p - 1) * th + (sig.q - 1) * cth) * d1;
  double sphere = -static_cast<double>(m) * (m + sig.p - 2) * sech2 * u0 +
                  static_cast<double>(n) * (n + sig.q - 2) * csch2 * u0;
  return radial + sphere;
}

bool ktype_membership_on_M(int m, int n, Signature sig) {
  if (sig.p < 1 || sig.q < 1)
    raise(errc::invalid_parameter, "ktype_membership_on_M needs p, q >= 1");
  return 2 * (m - n) == sig.q - sig.p;
}

}  // namespace minrep::operators
