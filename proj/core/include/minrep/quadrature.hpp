#pragma once

#include <functional>
#include <vector>

#include "minrep/error.hpp"

namespace minrep::quadrature {

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  long long evaluations = 0;
};

struct IntegrateOptions {
  double tol = 1e-12;     // absolute-or-relative target, whichever is looser
  int max_depth = 30;     // bisection depth of the adaptive scheme
  int max_panels = 20000;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (G7/K15) on [a, b].  Deterministic panel schedule:
// bisection in a fixed order.  Raises tolerance_not_met when the budget is
// exhausted before the estimate drops below tol.
QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    const IntegrateOptions& opts = {});

// Half-line integral of a function decaying like exp(-decay_rate * t):
// truncates at T with tail bound below tol/10, then integrates [0, T].
QuadratureResult integrate_half_line(const Integrand& f, double decay_rate,
                                     const IntegrateOptions& opts = {});

// Product quadrature rule on the unit sphere S^{q-1}: two points for q = 1,
// the uniform circle rule for q = 2, and Gauss-Legendre in the polar angle
// times a recursive rule for q >= 3.
class SphereRule {
public:
  // `order` controls points per angular factor (longitude gets 2*order).
  static SphereRule create(int q, int order);

  int ambient_dim() const { return q_; }
  std::size_t size() const { return weights_.size(); }
  const std::vector<double>& node(std::size_t i) const { return nodes_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

  double integrate(const std::function<double(const std::vector<double>&)>& f) const;

private:
  int q_ = 1;
  std::vector<std::vector<double>> nodes_;
  std::vector<double> weights_;
};

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace minrep::quadrature
