#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>

#include "minrep/halfint.hpp"

namespace minrep::exact {

using Rational = boost::multiprecision::cpp_rational;

// Exact value of a product/quotient of Gamma factors at half-integer
// arguments.  The stored data is
//
//     leading * sqrt(pi)^sqrt_pi_power * eps^{-pole_order}
//
// where eps is a formal infinitesimal: pole_order > 0 marks a pole of that
// order (leading = Laurent leading coefficient), pole_order < 0 an exact
// zero of that order.  Single Gamma values always have sqrt_pi_power in
// {0,1}; composite constants (e.g. V with two half-odd parameters) can
// carry higher powers of sqrt(pi), which stay symbolic because pi is
// irrational and cannot be folded into the rational part.
class GammaValue {
public:
  GammaValue() = default;
  explicit GammaValue(Rational r, int sqrt_pi_power = 0, int pole_order = 0)
      : rational_(std::move(r)), sqrt_pi_power_(sqrt_pi_power), pole_order_(pole_order) {
    normalize();
  }

  static GammaValue zero() { return GammaValue(Rational(0)); }
  static GammaValue one() { return GammaValue(Rational(1)); }

  const Rational& rational_part() const { return rational_; }
  int sqrt_pi_power() const { return sqrt_pi_power_; }
  int pole_order() const { return pole_order_; }

  bool is_pole() const { return pole_order_ > 0; }
  // True when the value, as a number, equals zero (a zero of positive order
  // or a plain rational zero).
  bool is_zero() const { return pole_order_ < 0 || rational_ == 0; }
  bool is_finite() const { return !is_pole(); }

  GammaValue operator*(const GammaValue& o) const {
    return GammaValue(rational_ * o.rational_, sqrt_pi_power_ + o.sqrt_pi_power_,
                      pole_order_ + o.pole_order_);
  }
  GammaValue operator/(const GammaValue& o) const;
  GammaValue operator-() const { return GammaValue(-rational_, sqrt_pi_power_, pole_order_); }

  GammaValue squared() const { return *this * *this; }

  // Structural equality of exact values; all representations of zero
  // compare equal, and poles compare by (order, leading, sqrt-pi power).
  friend bool operator==(const GammaValue& a, const GammaValue& b) {
    if (a.is_zero() && b.is_zero() && !a.is_pole() && !b.is_pole()) return true;
    return a.pole_order_ == b.pole_order_ && a.sqrt_pi_power_ == b.sqrt_pi_power_ &&
           a.rational_ == b.rational_;
  }

  // Numeric value; raises pole_in_formula on a pole.
  double to_double() const;

  // "3/4", "3/4*sqrtpi", "1/2*pi", "pole", "0".
  std::string str() const;

private:
  void normalize() {
    if (rational_ == 0 && pole_order_ >= 0) {
      sqrt_pi_power_ = 0;
      pole_order_ = 0;
    }
  }

  Rational rational_ = 0;
  int sqrt_pi_power_ = 0;
  int pole_order_ = 0;
};

std::ostream& operator<<(std::ostream& os, const GammaValue& v);

// Exact Gamma(x) for half-integer x.  Poles at x in {0,-1,-2,...} are
// returned in-band with pole_order 1 and the Laurent residue (-1)^k/k! as
// leading coefficient.
GammaValue gamma_half(HalfInt x);

}  // namespace minrep::exact
