#include "minrep/geometry.hpp"

#include <cmath>

namespace minrep::geometry {

namespace {

constexpr double kOnManifoldTol = 1e-12;

Vec concat(const Vec& a, const Vec& b) {
  Vec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Vec scaled(const Vec& a, double s) {
  Vec out = a;
  for (double& c : out) c *= s;
  return out;
}

Vec slice(const Vec& a, int from, int len) {
  return Vec(a.begin() + from, a.begin() + from + len);
}

}  // namespace

double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm_sq(const Vec& a) { return dot(a, a); }

double ProductSpherePoint::u1_norm_sq() const {
  double s = 0;
  for (int i = 0; i < split.p1; ++i) s += u[i] * u[i];
  return s;
}

double ProductSpherePoint::v1_norm_sq() const {
  double s = 0;
  for (int i = 0; i < split.q1; ++i) s += v[i] * v[i];
  return s;
}

ProductSpherePoint make_product_sphere_point(Vec u, Vec v, const SignatureSplit& split) {
  const Signature parent = split.parent();
  if (static_cast<int>(u.size()) != parent.p || static_cast<int>(v.size()) != parent.q)
    raise(errc::signature_mismatch, "sphere point dimensions do not match the split");
  if (std::abs(norm_sq(u) - 1.0) > kOnManifoldTol || std::abs(norm_sq(v) - 1.0) > kOnManifoldTol)
    raise(errc::not_on_sphere, "factors must be unit vectors");
  return ProductSpherePoint{std::move(u), std::move(v), split};
}

HyperboloidPoint make_hyperboloid_point(Vec x, Vec y, Signature sig) {
  if (static_cast<int>(x.size()) != sig.p || static_cast<int>(y.size()) != sig.q)
    raise(errc::signature_mismatch, "hyperboloid point dimensions do not match the signature");
  if (std::abs(norm_sq(x) - norm_sq(y) - 1.0) > kOnManifoldTol)
    raise(errc::invalid_parameter, "point does not satisfy |x|^2 - |y|^2 = 1");
  return HyperboloidPoint{std::move(x), std::move(y), sig};
}

MRegion m_region(const ProductSpherePoint& pt) {
  double d = std::sqrt(pt.u1_norm_sq()) - std::sqrt(pt.v1_norm_sq());
  if (d > kOnManifoldTol) return MRegion::Plus;
  if (d < -kOnManifoldTol) return MRegion::Minus;
  return MRegion::Boundary;
}

bool m_plus_empty(const SignatureSplit& split) { return split.p1 * split.q2 == 0; }
bool m_minus_empty(const SignatureSplit& split) { return split.p2 * split.q1 == 0; }

ProductSpherePoint phi1_forward(const HyperboloidPoint& a, const HyperboloidPoint& b,
                                const SignatureSplit& split) {
  if (a.sig != Signature{split.p1, split.q1} || b.sig != Signature{split.q2, split.p2})
    raise(errc::signature_mismatch, "phi1_forward expects X(p',q') x X(q'',p'') factors");
  const Vec& xp = a.x;         // x'
  const Vec& yp = a.y;         // y'
  const Vec& ypp = b.x;        // y''
  const Vec& xpp = b.y;        // x''
  double nx = std::sqrt(norm_sq(xp) + norm_sq(xpp));
  double ny = std::sqrt(norm_sq(yp) + norm_sq(ypp));
  return make_product_sphere_point(scaled(concat(xp, xpp), 1.0 / nx),
                                   scaled(concat(yp, ypp), 1.0 / ny), split);
}

std::pair<HyperboloidPoint, HyperboloidPoint> phi1_inverse(const ProductSpherePoint& pt) {
  const auto& s = pt.split;
  double d = pt.u1_norm_sq() - pt.v1_norm_sq();
  if (d <= kOnManifoldTol) raise(errc::not_in_m_plus, "point is not strictly inside M+");
  Vec up = slice(pt.u, 0, s.p1), upp = slice(pt.u, s.p1, s.p2);
  Vec vp = slice(pt.v, 0, s.q1), vpp = slice(pt.v, s.q1, s.q2);
  double r = 1.0 / std::sqrt(d);
  // |v''|^2 - |u''|^2 = |u'|^2 - |v'|^2 on the product of spheres
  HyperboloidPoint first{scaled(up, r), scaled(vp, r), Signature{s.p1, s.q1}};
  HyperboloidPoint second{scaled(vpp, r), scaled(upp, r), Signature{s.q2, s.p2}};
  return {std::move(first), std::move(second)};
}

ProductSpherePoint phi2_forward(const HyperboloidPoint& a, const HyperboloidPoint& b,
                                const SignatureSplit& split) {
  if (a.sig != Signature{split.q1, split.p1} || b.sig != Signature{split.p2, split.q2})
    raise(errc::signature_mismatch, "phi2_forward expects X(q',p') x X(p'',q'') factors");
  const Vec& yp = a.x;   // y'
  const Vec& xp = a.y;   // x'
  const Vec& xpp = b.x;  // x''
  const Vec& ypp = b.y;  // y''
  double nx = std::sqrt(norm_sq(xp) + norm_sq(xpp));
  double ny = std::sqrt(norm_sq(yp) + norm_sq(ypp));
  return make_product_sphere_point(scaled(concat(xp, xpp), 1.0 / nx),
                                   scaled(concat(yp, ypp), 1.0 / ny), split);
}

std::pair<HyperboloidPoint, HyperboloidPoint> phi2_inverse(const ProductSpherePoint& pt) {
  const auto& s = pt.split;
  double d = pt.v1_norm_sq() - pt.u1_norm_sq();
  if (d <= kOnManifoldTol) raise(errc::not_in_m_minus, "point is not strictly inside M-");
  Vec up = slice(pt.u, 0, s.p1), upp = slice(pt.u, s.p1, s.p2);
  Vec vp = slice(pt.v, 0, s.q1), vpp = slice(pt.v, s.q1, s.q2);
  double r = 1.0 / std::sqrt(d);
  HyperboloidPoint first{scaled(vp, r), scaled(up, r), Signature{s.q1, s.p1}};
  HyperboloidPoint second{scaled(upp, r), scaled(vpp, r), Signature{s.p2, s.q2}};
  return {std::move(first), std::move(second)};
}

namespace {

// Retract an off-manifold step back onto |x|^2 - |y|^2 = 1.
HyperboloidPoint hyperboloid_retract(const HyperboloidPoint& p, const Vec& dx, const Vec& dy,
                                     double eps) {
  Vec x = p.x, y = p.y;
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += eps * dx[i];
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += eps * dy[i];
  double d = norm_sq(x) - norm_sq(y);
  double r = 1.0 / std::sqrt(d);
  return HyperboloidPoint{scaled(x, r), scaled(y, r), p.sig};
}

double tangency_residual(const HyperboloidPoint& p, const Vec& dx, const Vec& dy) {
  return std::abs(dot(p.x, dx) - dot(p.y, dy));
}

}  // namespace

ConformalCheck conformal_factor_check(const HyperboloidPoint& a, const HyperboloidPoint& b,
                                      const SignatureSplit& split, const TangentPair& v,
                                      const TangentPair& w, double fd_step) {
  for (const TangentPair* t : {&v, &w}) {
    if (tangency_residual(a, t->ax, t->ay) > 1e-10 || tangency_residual(b, t->bx, t->by) > 1e-10)
      raise(errc::tangency_violated, "vector is not tangent to the product hyperboloid");
  }

  auto push = [&](const TangentPair& t) {
    HyperboloidPoint ap = hyperboloid_retract(a, t.ax, t.ay, fd_step);
    HyperboloidPoint am = hyperboloid_retract(a, t.ax, t.ay, -fd_step);
    HyperboloidPoint bp = hyperboloid_retract(b, t.bx, t.by, fd_step);
    HyperboloidPoint bm = hyperboloid_retract(b, t.bx, t.by, -fd_step);
    ProductSpherePoint fp = phi1_forward(ap, bp, split);
    ProductSpherePoint fm = phi1_forward(am, bm, split);
    Vec du(fp.u.size()), dv(fp.v.size());
    for (std::size_t i = 0; i < du.size(); ++i) du[i] = (fp.u[i] - fm.u[i]) / (2 * fd_step);
    for (std::size_t i = 0; i < dv.size(); ++i) dv[i] = (fp.v[i] - fm.v[i]) / (2 * fd_step);
    return std::pair<Vec, Vec>{std::move(du), std::move(dv)};
  };

  auto [dvu, dvv] = push(v);
  auto [dwu, dwv] = push(w);

  ConformalCheck out;
  // metric on S^{p-1} x S^{q-1}: du^2 - dv^2
  out.lhs = dot(dvu, dwu) - dot(dvv, dwv);
  // metric on X(p',q') x X(q'',p''): (dx'^2 - dy'^2) - (dy''^2 - dx''^2)
  double g_first = dot(v.ax, w.ax) - dot(v.ay, w.ay);
  double g_second = dot(v.bx, w.bx) - dot(v.by, w.by);
  double x_norm_sq = norm_sq(a.x) + norm_sq(b.y);  // |x'|^2 + |x''|^2
  out.rhs = (g_first - g_second) / x_norm_sq;
  return out;
}

HypProductFunction twisted_pullback_forward(const SphereFunction& F) {
  const SignatureSplit split = F.split;
  const Signature parent = split.parent();
  const double expo = -(parent.p + parent.q - 4) / 4.0;
  auto f = F.f;
  return HypProductFunction{
      split, [split, expo, f](const HyperboloidPoint& a, const HyperboloidPoint& b) {
        double x_norm_sq = norm_sq(a.x) + norm_sq(b.y);
        return std::pow(x_norm_sq, expo) * f(phi1_forward(a, b, split));
      }};
}

SphereFunction twisted_pullback_inverse(const HypProductFunction& f) {
  const SignatureSplit split = f.split;
  const Signature parent = split.parent();
  const double expo = -(parent.p + parent.q - 4) / 4.0;
  auto fn = f.f;
  return SphereFunction{split, [split, expo, fn](const ProductSpherePoint& pt) {
                          if (pt.split != split)
                            raise(errc::chart_mismatch,
                                  "point split does not match the function chart");
                          auto [a, b] = phi1_inverse(pt);
                          double d = pt.u1_norm_sq() - pt.v1_norm_sq();
                          return std::pow(d, expo) * fn(a, b);
                        }};
}

SphereFunction t_plus_extend(const HypProductFunction& f) {
  SphereFunction inner = twisted_pullback_inverse(f);
  auto g = inner.f;
  SignatureSplit split = f.split;
  return SphereFunction{split, [split, g](const ProductSpherePoint& pt) {
                          if (pt.split != split)
                            raise(errc::chart_mismatch,
                                  "point split does not match the function chart");
                          if (m_region(pt) != MRegion::Plus) return 0.0;
                          return g(pt);
                        }};
}

ProductSpherePoint angular_chart_to_point(const AngularChart& chart) {
  const auto& s = chart.split;
  Vec u = concat(scaled(chart.omega_p, std::cos(chart.theta)),
                 scaled(chart.omega_pp, std::sin(chart.theta)));
  Vec v = concat(scaled(chart.eta_p, std::cos(chart.phi)),
                 scaled(chart.eta_pp, std::sin(chart.phi)));
  return make_product_sphere_point(std::move(u), std::move(v), s);
}

double angular_volume_weight(const AngularChart& chart) {
  const auto& s = chart.split;
  return std::pow(std::abs(std::cos(chart.theta)), s.p1 - 1) *
         std::pow(std::abs(std::sin(chart.theta)), s.p2 - 1) *
         std::pow(std::abs(std::cos(chart.phi)), s.q1 - 1) *
         std::pow(std::abs(std::sin(chart.phi)), s.q2 - 1);
}

ProductSpherePoint polar_chart_to_point(const PolarChart& chart) {
  const auto& s = chart.split;
  double ct = chart.r * std::cos(chart.psi);   // cos theta
  double cf = chart.r * std::sin(chart.psi);   // cos phi
  double st = std::sqrt(1.0 - ct * ct);
  double sf = std::sqrt(1.0 - cf * cf);
  Vec u = concat(scaled(chart.omega_p, ct), scaled(chart.omega_pp, st));
  Vec v = concat(scaled(chart.eta_p, cf), scaled(chart.eta_pp, sf));
  return make_product_sphere_point(std::move(u), std::move(v), s);
}

double polar_volume_weight(const PolarChart& chart) {
  const auto& s = chart.split;
  double ct = chart.r * std::cos(chart.psi);
  double cf = chart.r * std::sin(chart.psi);
  double st = std::sqrt(1.0 - ct * ct);
  double sf = std::sqrt(1.0 - cf * cf);
  // angular weight times |d(theta,phi)/d(r,psi)| = r / (sin theta sin phi)
  return std::pow(chart.r, s.p1 + s.q1 - 1) * std::pow(std::abs(std::cos(chart.psi)), s.p1 - 1) *
         std::pow(std::abs(std::sin(chart.psi)), s.q1 - 1) * std::pow(st, s.p2 - 2) *
         std::pow(sf, s.q2 - 2);
}

bool polar_in_m_plus(const PolarChart& chart) {
  return chart.r != 0.0 && std::cos(2.0 * chart.psi) > 0.0;
}

SignatureSplit swap_split_roles(const SignatureSplit& split) {
  return SignatureSplit{split.p2, split.q2, split.p1, split.q1};
}

namespace {

PolarChart swap_chart_blocks(const PolarChart& chart) {
  PolarChart swapped;
  swapped.r = chart.r;
  swapped.psi = chart.psi;
  swapped.split = swap_split_roles(chart.split);
  swapped.omega_p = chart.omega_pp;
  swapped.omega_pp = chart.omega_p;
  swapped.eta_p = chart.eta_pp;
  swapped.eta_pp = chart.eta_p;
  return swapped;
}

}  // namespace

ProductSpherePoint case3_polar_chart_to_point(const PolarChart& chart) {
  ProductSpherePoint swapped = polar_chart_to_point(swap_chart_blocks(chart));
  const auto& s = chart.split;
  // undo the block exchange: (u'', u') -> (u', u''), (v'', v') -> (v', v'')
  Vec u = concat(slice(swapped.u, s.p2, s.p1), slice(swapped.u, 0, s.p2));
  Vec v = concat(slice(swapped.v, s.q2, s.q1), slice(swapped.v, 0, s.q2));
  return make_product_sphere_point(std::move(u), std::move(v), s);
}

double case3_polar_volume_weight(const PolarChart& chart) {
  return polar_volume_weight(swap_chart_blocks(chart));
}

BoundaryExponents boundary_exponents(HalfInt lam_p, HalfInt lam_pp, const SignatureSplit& split) {
  BoundaryExponents out;
  HalfInt sum = lam_p + lam_pp;
  out.case1_exp = sum.value() / 2.0;
  out.case2_radial_exp = lam_pp.value() - (split.p1 + split.q1 - 2) / 2.0;
  const HalfInt two_lpp = 2 * lam_pp;
  // case 1 thresholds and the additional case 2 thresholds
  out.l2 = sum > HalfInt(-1) && two_lpp > HalfInt(-1);
  out.grad_l2eps = sum >= HalfInt(1) && two_lpp >= HalfInt(0);
  out.hess_l1 = sum > HalfInt(2) && two_lpp > HalfInt(2 - split.p1 - split.q1);
  return out;
}

}  // namespace minrep::geometry
