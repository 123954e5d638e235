#include "minrep/gamma_value.hpp"

#include <cmath>
#include <ostream>

namespace minrep::exact {

GammaValue GammaValue::operator/(const GammaValue& o) const {
  if (o.rational_ == 0 && o.pole_order_ >= 0)
    raise(errc::invalid_parameter, "division by exact zero GammaValue");
  return GammaValue(rational_ / o.rational_, sqrt_pi_power_ - o.sqrt_pi_power_,
                    pole_order_ - o.pole_order_);
}

double GammaValue::to_double() const {
  if (is_pole()) raise(errc::pole_in_formula, "GammaValue is a pole");
  if (is_zero()) return 0.0;
  double r = rational_.convert_to<double>();
  if (sqrt_pi_power_ != 0) r *= std::pow(std::sqrt(M_PI), sqrt_pi_power_);
  return r;
}

std::string GammaValue::str() const {
  if (is_pole()) return "pole";
  if (is_zero()) return "0";
  std::string s = rational_.str();
  if (sqrt_pi_power_ == 1) {
    s += "*sqrtpi";
  } else if (sqrt_pi_power_ == -1) {
    s += "/sqrtpi";
  } else if (sqrt_pi_power_ != 0) {
    int k = sqrt_pi_power_;
    std::string pi_part = (k % 2 == 0) ? "pi^" + std::to_string(k / 2)
                                       : "pi^(" + std::to_string(k) + "/2)";
    if (k == 2) pi_part = "pi";
    s += "*" + pi_part;
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const GammaValue& v) { return os << v.str(); }

GammaValue gamma_half(HalfInt x) {
  if (x.is_integer()) {
    std::int64_t n = x.integer();
    if (n <= 0) {
      // Gamma(-k + eps) ~ (-1)^k / (k! eps)
      std::int64_t k = -n;
      Rational lead(1);
      for (std::int64_t i = 2; i <= k; ++i) lead /= i;
      if (k % 2 == 1) lead = -lead;
      return GammaValue(lead, 0, 1);
    }
    Rational r(1);
    for (std::int64_t i = 2; i < n; ++i) r *= i;
    return GammaValue(r);
  }
  // Half-odd argument: walk the recurrence Gamma(x+1) = x Gamma(x) from
  // Gamma(1/2) = sqrt(pi).
  Rational r(1);
  HalfInt t = HalfInt::half();
  if (x > t) {
    while (t < x) {
      r *= Rational(t.twice(), 2);
      t += 1;
    }
  } else {
    while (t > x) {
      t -= 1;
      r /= Rational(t.twice(), 2);
    }
  }
  return GammaValue(r, 1);
}

}  // namespace minrep::exact
