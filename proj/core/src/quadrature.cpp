#include "minrep/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace minrep::quadrature {

namespace {

// G7/K15 nodes and weights on [-1, 1] (symmetric; positive half listed).
constexpr double kKronrodNodes[8] = {
    0.0,
    0.2077849550078984676006894037732449,
    0.4058451513773971669066064120769615,
    0.5860872354676911302941448382587296,
    0.7415311855993944398638647732807884,
    0.8648644233597690727897127886409262,
    0.9491079123427585245261896840478513,
    0.9914553711208126392068546975263285,
};
constexpr double kKronrodWeights[8] = {
    0.2094821410847278280129991748917143,
    0.2044329400752988924141619992346491,
    0.1903505780647854099132564024210137,
    0.1690047266392679028265834265985503,
    0.1406532597155259187451895905102379,
    0.1047900103222501838398763225415180,
    0.0630920926299785532907006631892042,
    0.0229353220105292249637320080589695,
};
// Gauss-7 weights matching Kronrod nodes 1, 3, 5, 7 (i.e. odd indices).
constexpr double kGaussWeights[4] = {
    0.4179591836734693877551020408163265,
    0.3818300505051189449503697754889751,
    0.2797053914892766679014677714237796,
    0.1294849661688696932706114326790820,
};

struct Panel {
  double a, b, value, error;
};

void gk15(const Integrand& f, double a, double b, double* value, double* error) {
  const double h = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double fk[15];
  fk[7] = f(mid);
  for (int i = 1; i < 8; ++i) {
    fk[7 - i] = f(mid - h * kKronrodNodes[i]);
    fk[7 + i] = f(mid + h * kKronrodNodes[i]);
  }
  double kron = kKronrodWeights[0] * fk[7];
  for (int i = 1; i < 8; ++i) kron += kKronrodWeights[i] * (fk[7 - i] + fk[7 + i]);
  double gauss = kGaussWeights[0] * fk[7];
  for (int i = 1; i < 4; ++i) gauss += kGaussWeights[i] * (fk[7 - 2 * i] + fk[7 + 2 * i]);
  *value = kron * h;
  *error = std::abs((kron - gauss) * h);
}

}  // namespace

QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    const IntegrateOptions& opts) {
  QuadratureResult res;
  double v0, e0;
  gk15(f, a, b, &v0, &e0);
  res.evaluations = 15;

  auto cmp = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> queue(cmp);
  queue.push(Panel{a, b, v0, e0});
  double total_value = v0, total_error = e0;
  int panels = 1;

  auto good_enough = [&] {
    return total_error <= opts.tol * std::max(1.0, std::abs(total_value));
  };

  while (!good_enough() && panels < opts.max_panels) {
    Panel worst = queue.top();
    queue.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval exhausted in doubles
      queue.push(Panel{worst.a, worst.b, worst.value, 0.0});
      total_error -= worst.error;
      continue;
    }
    double vl, el, vr, er;
    gk15(f, worst.a, mid, &vl, &el);
    gk15(f, mid, worst.b, &vr, &er);
    res.evaluations += 30;
    total_value += vl + vr - worst.value;
    total_error += el + er - worst.error;
    queue.push(Panel{worst.a, mid, vl, el});
    queue.push(Panel{mid, worst.b, vr, er});
    ++panels;
  }
  if (!good_enough())
    raise(errc::tolerance_not_met, "adaptive quadrature exhausted its panel budget");
  res.value = total_value;
  res.error_estimate = total_error;
  return res;
}

QuadratureResult integrate_half_line(const Integrand& f, double decay_rate,
                                     const IntegrateOptions& opts) {
  if (decay_rate <= 0)
    raise(errc::invalid_parameter, "half-line integration needs a positive decay rate");
  // exp(-rate * T) below tol/10 relative to an O(1) scale
  double T = std::max(10.0, -std::log(opts.tol * 0.1) / decay_rate + 5.0);
  return integrate_interval(f, 0.0, T, opts);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton iteration from the Chebyshev initial guess
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[n - 1 - i] = x;
    weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

SphereRule SphereRule::create(int q, int order) {
  if (q < 1 || order < 1) raise(errc::invalid_parameter, "SphereRule needs q >= 1, order >= 1");
  SphereRule rule;
  rule.q_ = q;
  if (q == 1) {
    rule.nodes_ = {{1.0}, {-1.0}};
    rule.weights_ = {1.0, 1.0};
    return rule;
  }
  if (q == 2) {
    int n = 2 * order;
    for (int i = 0; i < n; ++i) {
      double a = 2.0 * M_PI * i / n;
      rule.nodes_.push_back({std::cos(a), std::sin(a)});
      rule.weights_.push_back(2.0 * M_PI / n);
    }
    return rule;
  }
  // x = (cos psi, sin psi * y), y on S^{q-2};  dS = sin(psi)^{q-2} dpsi dS'.
  SphereRule inner = create(q - 1, order);
  std::vector<double> gl_nodes, gl_weights;
  gauss_legendre(order, gl_nodes, gl_weights);
  for (int i = 0; i < order; ++i) {
    double psi = 0.5 * M_PI * (gl_nodes[i] + 1.0);
    double w_psi = 0.5 * M_PI * gl_weights[i] * std::pow(std::sin(psi), q - 2);
    for (std::size_t j = 0; j < inner.size(); ++j) {
      std::vector<double> node;
      node.reserve(q);
      node.push_back(std::cos(psi));
      for (double c : inner.node(j)) node.push_back(std::sin(psi) * c);
      rule.nodes_.push_back(std::move(node));
      rule.weights_.push_back(w_psi * inner.weight(j));
    }
  }
  return rule;
}

double SphereRule::integrate(const std::function<double(const std::vector<double>&)>& f) const {
  double sum = 0, comp = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    double y = weights_[i] * f(nodes_[i]) - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace minrep::quadrature
