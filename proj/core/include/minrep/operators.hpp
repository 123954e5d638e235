#pragma once

#include <functional>

#include "minrep/geometry.hpp"
#include "minrep/halfint.hpp"

namespace minrep::operators {

// Conformal shift between the Laplace-Beltrami and Yamabe operators on
// X(p,q): (1/4)(p+q-1)(p+q-3).
double yamabe_shift(Signature sig);

// On a product eigenfunction, the product-space Yamabe eigenvalue is the
// first factor's eigenvalue minus the second factor's.
inline double product_yamabe_eigenvalue(double first, double second) { return first - second; }

// Laplace-Beltrami eigenvalue on X(p,q) for spectral parameter lambda:
// -lambda^2 + (p+q-2)^2/4.
double laplace_eigenvalue(Signature sig, double lam);

// Yamabe eigenvalue: -lambda^2 + 1/4.
inline double yamabe_eigenvalue(double lam) { return -lam * lam + 0.25; }

// The radial profile u(t) = cosh(t)^m sinh(t)^n phi_{i lam}^{(n+q/2-1, m+p/2-1)}(t)
// of the K-type (m, n) eigenfunction on X(p,q).
double radial_profile(int m, int n, Signature sig, double lam, double t);

// K-type eigenfunction f(omega cosh t, eta sinh t) =
// h_m(omega) h_n(eta) * radial_profile(t) with zonal representatives h_m,
// h_n about the given pole axes.
struct RadialAnsatz {
  int m = 0;
  int n = 0;
  Signature sig;
  double lam = 0;
  geometry::Vec x_pole;  // axis in R^p
  geometry::Vec y_pole;  // axis in R^q

  double operator()(const geometry::HyperboloidPoint& pt) const;
};

RadialAnsatz radial_ansatz(int m, int n, Signature sig, double lam, geometry::Vec x_pole,
                           geometry::Vec y_pole);

// Applies the (validated) radial part of the Laplace-Beltrami operator on
// X(p,q) to a profile u(t) at a K-type (m,n), with the sphere Laplacians
// acting by their eigenvalues -m(m+p-2) and -n(n+q-2):
//
//   (L u)(t) = -u'' - ((p-1)tanh t + (q-1)coth t) u'
//              - m(m+p-2) sech^2 t * u + n(n+q-2) csch^2 t * u
//
// Derivatives are taken by 5-point central differences with step h.
double apply_radial_laplacian(int m, int n, Signature sig, const std::function<double(double)>& u,
                              double t, double h = 1e-3);

// H^m x H^n solves the product-Yamabe equation on S^{p-1} x S^{q-1}
// iff m + p/2 = n + q/2.
bool ktype_membership_on_M(int m, int n, Signature sig);

}  // namespace minrep::operators
