#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "minrep/halfint.hpp"

namespace minrep::geometry {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm_sq(const Vec& a);

// Point of M = S^{p-1} x S^{q-1} carrying the split that induces
// u = (u', u'') and v = (v', v'').
struct ProductSpherePoint {
  Vec u;  // unit vector in R^p
  Vec v;  // unit vector in R^q
  SignatureSplit split;

  double u1_norm_sq() const;  // |u'|^2
  double v1_norm_sq() const;  // |v'|^2
};

ProductSpherePoint make_product_sphere_point(Vec u, Vec v, const SignatureSplit& split);

// Point of the hyperboloid X(p,q) = {|x|^2 - |y|^2 = 1} in R^{p,q}.
struct HyperboloidPoint {
  Vec x;
  Vec y;
  Signature sig;
};

HyperboloidPoint make_hyperboloid_point(Vec x, Vec y, Signature sig);

enum class MRegion { Plus, Minus, Boundary };

// Classification by the sign of |u'| - |v'| with a 1e-12 boundary band.
MRegion m_region(const ProductSpherePoint& pt);

// M+ is empty iff p'q'' = 0; M- is empty iff p''q' = 0.
bool m_plus_empty(const SignatureSplit& split);
bool m_minus_empty(const SignatureSplit& split);

// Phi1: X(p',q') x X(q'',p'') -> M+, ((x',y'),(y'',x'')) |-> ((x',x'')/|x|, (y',y'')/|y|).
// The second factor point is stored with its positive part first:
// b.x = y'' (q'' coords), b.y = x'' (p'' coords).
ProductSpherePoint phi1_forward(const HyperboloidPoint& a, const HyperboloidPoint& b,
                                const SignatureSplit& split);

// Inverse of Phi1 on M+ (not_in_m_plus off the open region):
// ((u',v')/sqrt(|u'|^2-|v'|^2), (v'',u'')/sqrt(|v''|^2-|u''|^2)).
std::pair<HyperboloidPoint, HyperboloidPoint> phi1_inverse(const ProductSpherePoint& pt);

// Phi2: X(q',p') x X(p'',q'') -> M-, ((y',x'),(x'',y'')) |-> ((x',x'')/|x|, (y',y'')/|y|).
// First factor: a.x = y' (q' coords), a.y = x' (p' coords); second factor:
// b.x = x'' (p'' coords), b.y = y'' (q'' coords).
ProductSpherePoint phi2_forward(const HyperboloidPoint& a, const HyperboloidPoint& b,
                                const SignatureSplit& split);

std::pair<HyperboloidPoint, HyperboloidPoint> phi2_inverse(const ProductSpherePoint& pt);

// Numerical conformal-factor check for Phi1 at (a, b): pushes tangent
// vectors through Phi1 by central differences and compares
// g_{SxS}(dPhi v, dPhi w) with |x|^{-2} g_{XxX}(v, w), where the second
// factor of each product metric enters with a minus sign.
struct ConformalCheck {
  double lhs = 0;
  double rhs = 0;
};

struct TangentPair {
  Vec ax, ay;  // components on the first factor
  Vec bx, by;  // components on the second factor
};

ConformalCheck conformal_factor_check(const HyperboloidPoint& a, const HyperboloidPoint& b,
                                      const SignatureSplit& split, const TangentPair& v,
                                      const TangentPair& w, double fd_step = 1e-5);

// Chart-tagged scalar fields.
struct SphereFunction {
  SignatureSplit split;
  std::function<double(const ProductSpherePoint&)> f;
};

struct HypProductFunction {
  SignatureSplit split;
  std::function<double(const HyperboloidPoint&, const HyperboloidPoint&)> f;
};

// Twisted pull-back along Phi1, with conformal weight exponent -(p+q-4)/4:
//   forward:  F on M+  |->  (|x'|^2+|x''|^2)^{-(p+q-4)/4} F(Phi1(.)) on X x X
//   inverse:  f on X x X  |->  (|u'|^2-|v'|^2)^{-(p+q-4)/4} f(Phi1^{-1}(.)) on M+
// The two directions are mutually inverse.
HypProductFunction twisted_pullback_forward(const SphereFunction& F);
SphereFunction twisted_pullback_inverse(const HypProductFunction& f);

// T+ extension: the twisted inverse pull-back on M+, extended by zero on
// the rest of M (clipped-power convention r_+^nu).
SphereFunction t_plus_extend(const HypProductFunction& f);

// Angular chart (theta, phi, omega', omega'', eta', eta'') |->
// (omega' cos theta, omega'' sin theta, eta' cos phi, eta'' sin phi).
struct AngularChart {
  double theta = 0;
  double phi = 0;
  Vec omega_p, omega_pp, eta_p, eta_pp;
  SignatureSplit split;
};

ProductSpherePoint angular_chart_to_point(const AngularChart& chart);

// |cos theta|^{p'-1} |sin theta|^{p''-1} |cos phi|^{q'-1} |sin phi|^{q''-1}.
double angular_volume_weight(const AngularChart& chart);

// Polar chart around the cos theta = cos phi = 0 stratum:
// cos theta = r cos psi, cos phi = r sin psi.
struct PolarChart {
  double r = 0;
  double psi = 0;
  Vec omega_p, omega_pp, eta_p, eta_pp;
  SignatureSplit split;
};

ProductSpherePoint polar_chart_to_point(const PolarChart& chart);

// Exact chart weight r^{p'+q'-1} (cos psi)^{p'-1} (sin psi)^{q'-1}
// (sin theta)^{p''-2} (sin phi)^{q''-2}; smooth positive near r = 0.
double polar_volume_weight(const PolarChart& chart);

// In the polar chart, M+ = {r != 0, cos 2psi > 0}.
bool polar_in_m_plus(const PolarChart& chart);

// The sin theta = sin phi = 0 stratum is handled by the symmetry
// (theta, phi) -> (pi/2 - theta, pi/2 - phi), which swaps the roles of
// (p', q') and (p'', q''): a polar chart around that stratum is the
// ordinary polar chart of the swapped split with the u and v blocks
// exchanged.
SignatureSplit swap_split_roles(const SignatureSplit& split);

// chart.split refers to the original split; (r, psi) parametrize
// sin theta = r cos psi, sin phi = r sin psi.  The weight carries
// r^{p''+q''-1}.
ProductSpherePoint case3_polar_chart_to_point(const PolarChart& chart);
double case3_polar_volume_weight(const PolarChart& chart);

// Boundary exponents and integrability flags near the boundary of M+ for
// the zero-extended pull-back of a product eigenfunction with parameters
// (lambda', lambda''):
//   case 1 (generic stratum): (cos^2 theta - cos^2 phi)_+^{(l'+l'')/2}
//   case 2 (polar stratum):   r_+^{(2 l'' - p' - q' + 2)/2}
// The flags combine the displayed implications of both cases.
struct BoundaryExponents {
  double case1_exp = 0;
  double case2_radial_exp = 0;
  bool l2 = false;         // T+f in L^2_loc
  bool grad_l2eps = false;  // Y(T+f) in L^{2-eps}_loc for all eps > 0
  bool hess_l1 = false;    // Y1 Y2 (T+f) in L^1_loc
};

BoundaryExponents boundary_exponents(HalfInt lam_p, HalfInt lam_pp, const SignatureSplit& split);

}  // namespace minrep::geometry
