#include "minrep/harmonics.hpp"

#include <cmath>

namespace minrep::harmonics {

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::int64_t dim_harmonic(const HarmonicLabel& label) {
  const auto [l, q] = label;
  if (l < 0 || q < 1) raise(errc::invalid_parameter, "dim_harmonic needs l >= 0, q >= 1");
  // harmonic polynomials = degree-l polynomials modulo |x|^2 * (degree l-2)
  return binom(l + q - 1, q - 1) - binom(l + q - 3, q - 1);
}

double zonal_kernel(int l, int q, double u) {
  if (l < 0 || q < 1) raise(errc::invalid_parameter, "zonal_kernel needs l >= 0, q >= 1");
  if (l == 0) return 1.0;
  if (q == 1) return l == 1 ? u : 0.0;
  if (q == 2) {
    // T_l via the recurrence; stays normalized at u = 1
    double pm1 = 1.0, p = u;
    for (int k = 2; k <= l; ++k) {
      double next = 2 * u * p - pm1;
      pm1 = p;
      p = next;
    }
    return p;
  }
  const double alpha = q / 2.0 - 1.0;
  // Gegenbauer recurrence k C_k = 2(k+a-1) u C_{k-1} - (k+2a-2) C_{k-2},
  // divided through by C_l(1) = binom(l+2a-1, l) at the end.
  double pm1 = 1.0, p = 2 * alpha * u;
  for (int k = 2; k <= l; ++k) {
    double next = (2 * (k + alpha - 1) * u * p - (k + 2 * alpha - 2) * pm1) / k;
    pm1 = p;
    p = next;
  }
  double at_one = 1.0;
  for (int k = 1; k <= l; ++k) at_one *= (2 * alpha + k - 1) / k;  // C_l(1)
  return p / at_one;
}

ZonalHarmonic::ZonalHarmonic(HarmonicLabel label, std::vector<double> pole)
    : label_(label), pole_(std::move(pole)) {
  if (static_cast<int>(pole_.size()) != label_.ambient_dim)
    raise(errc::invalid_parameter, "pole dimension does not match the ambient dimension");
  double n2 = 0;
  for (double c : pole_) n2 += c * c;
  if (std::abs(n2 - 1.0) > 1e-12) raise(errc::not_on_sphere, "pole axis is not a unit vector");
}

double ZonalHarmonic::operator()(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != label_.ambient_dim)
    raise(errc::invalid_parameter, "point dimension does not match the ambient dimension");
  double n2 = 0, dot = 0;
  for (int i = 0; i < label_.ambient_dim; ++i) {
    n2 += point[i] * point[i];
    dot += point[i] * pole_[i];
  }
  if (std::abs(n2 - 1.0) > 1e-12) raise(errc::not_on_sphere, "point is not on the unit sphere");
  return zonal_kernel(label_.degree, label_.ambient_dim, dot);
}

double ZonalHarmonic::l2_norm_sq() const {
  return sphere_volume(label_.ambient_dim) / static_cast<double>(dim_harmonic(label_));
}

double yamabe_eigenvalue_sphere(const HarmonicLabel& label) {
  double s = label.degree + label.ambient_dim / 2.0 - 1.0;
  return 0.25 - s * s;
}

std::vector<std::pair<int, int>> classical_branching(int n, int q1, int q2) {
  if (n < 0 || q1 < 1 || q2 < 1)
    raise(errc::invalid_parameter, "classical_branching needs n >= 0, q1, q2 >= 1");
  std::vector<std::pair<int, int>> out;
  for (int s = n % 2; s <= n; s += 2)
    for (int k = s; k >= 0; --k) out.emplace_back(k, s - k);
  return out;
}

double sphere_volume(int q) {
  if (q < 1) raise(errc::invalid_parameter, "sphere_volume needs q >= 1");
  // vol(S^{q-1}) = 2 pi^{q/2} / Gamma(q/2)
  return 2.0 * std::pow(M_PI, q / 2.0) / std::tgamma(q / 2.0);
}

}  // namespace minrep::harmonics
