#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "minrep/error.hpp"

namespace minrep {

// Exact element of (1/2)*Z, stored as twice its value.  This is the common
// currency for all spectral parameters (lambda, lambda', lambda'', b, rho).
class HalfInt {
public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int n) : twice_(2 * static_cast<std::int64_t>(n)) {}  // NOLINT(google-explicit-constructor)
  constexpr HalfInt(long n) : twice_(2 * static_cast<std::int64_t>(n)) {}  // NOLINT
  constexpr HalfInt(long long n) : twice_(2 * static_cast<std::int64_t>(n)) {}  // NOLINT

  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt half() { return from_twice(1); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  std::int64_t integer() const {
    if (!is_integer()) raise(errc::invalid_parameter, "half-integer " + str() + " is not integral");
    return twice_ / 2;
  }

  constexpr double value() const { return static_cast<double>(twice_) / 2.0; }

  std::string str() const;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
  friend constexpr HalfInt operator*(std::int64_t n, HalfInt a) { return from_twice(n * a.twice_); }

  HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  HalfInt& operator++() {
    twice_ += 2;
    return *this;
  }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
  std::int64_t twice_ = 0;
};

std::ostream& operator<<(std::ostream& os, HalfInt h);

// Signature (p, q) of an indefinite quadratic form; p, q >= 0.
struct Signature {
  int p = 0;
  int q = 0;

  friend constexpr bool operator==(const Signature&, const Signature&) = default;
};

std::ostream& operator<<(std::ostream& os, const Signature& s);

// Split (p', q', p'', q'') of a parent signature, p'+p'' = p, q'+q'' = q.
struct SignatureSplit {
  int p1 = 0;
  int q1 = 0;
  int p2 = 0;
  int q2 = 0;

  constexpr Signature parent() const { return Signature{p1 + p2, q1 + q2}; }
  constexpr Signature first() const { return Signature{p1, q1}; }
  constexpr Signature second() const { return Signature{p2, q2}; }
  constexpr int min_part() const {
    int m = p1;
    if (q1 < m) m = q1;
    if (p2 < m) m = p2;
    if (q2 < m) m = q2;
    return m;
  }

  friend constexpr bool operator==(const SignatureSplit&, const SignatureSplit&) = default;
};

SignatureSplit make_split(Signature parent, int p1, int q1, int p2, int q2);

std::ostream& operator<<(std::ostream& os, const SignatureSplit& s);

}  // namespace minrep
