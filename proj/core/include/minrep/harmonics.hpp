#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "minrep/error.hpp"

namespace minrep::harmonics {

// Space of degree-l spherical harmonics on R^q restricted to S^{q-1}.
struct HarmonicLabel {
  int degree = 0;       // l
  int ambient_dim = 1;  // q
};

// dim H^l(R^q); 0 in the degenerate cases (q = 1 with l >= 2).
std::int64_t dim_harmonic(const HarmonicLabel& label);

// Value of the degree-l Gegenbauer kernel normalized to 1 at u = 1, i.e.
// C_l^{(q/2-1)}(u) / C_l^{(q/2-1)}(1); for q = 2 this is the Chebyshev
// polynomial T_l(u), for q = 1 it is u^l on {-1, +1}.
double zonal_kernel(int l, int q, double u);

// Zonal spherical harmonic of degree l about a pole axis, normalized to 1
// at the pole.  An eigenfunction of the sphere Laplacian with eigenvalue
// -l(l+q-2).
class ZonalHarmonic {
public:
  ZonalHarmonic(HarmonicLabel label, std::vector<double> pole);

  const HarmonicLabel& label() const { return label_; }
  const std::vector<double>& pole() const { return pole_; }

  // point must lie on S^{q-1} within 1e-12 (not_on_sphere otherwise).
  double operator()(std::span<const double> point) const;

  // Squared L^2(S^{q-1}) norm: vol(S^{q-1}) / dim H^l(R^q).
  double l2_norm_sq() const;

private:
  HarmonicLabel label_;
  std::vector<double> pole_;
};

// Eigenvalue of the Yamabe operator of S^{q-1} on H^l(R^q):
// 1/4 - (l + q/2 - 1)^2.
double yamabe_eigenvalue_sphere(const HarmonicLabel& label);

// Pairs (k, l) of the decomposition of H^n(R^{q1+q2}) under
// O(q1) x O(q2): k + l <= n and k + l == n mod 2.  Ordered by total degree,
// then by k descending.
std::vector<std::pair<int, int>> classical_branching(int n, int q1, int q2);

// vol(S^{q-1}) = 2 pi^{q/2} / Gamma(q/2).
double sphere_volume(int q);

}  // namespace minrep::harmonics
