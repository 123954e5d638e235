#include "minrep/param_sets.hpp"

#include <algorithm>

namespace minrep::exact {

namespace {

// Smallest member of A0(p,q), or nullopt when the set is empty.
std::optional<HalfInt> a0_min(Signature sig) {
  const auto [p, q] = sig;
  if (p == 1 && q == 0) return HalfInt::from_twice(-1);
  if (p <= 1) return std::nullopt;
  // lattice Z + (p+q)/2: integers for even p+q, half-odd otherwise
  if (q == 0) return HalfInt::from_twice(p - 2);  // lambda >= p/2 - 1
  return (p + q) % 2 == 0 ? HalfInt(0) : HalfInt::from_twice(-1);  // lambda > -1
}

bool in_a0_lattice(Signature sig, HalfInt lam) {
  return (lam.twice() - (sig.p + sig.q)) % 2 == 0;
}

}  // namespace

std::vector<HalfInt> a0_set(Signature sig, HalfInt lambda_max) {
  std::vector<HalfInt> out;
  if (sig.p == 1 && sig.q == 0) {
    for (HalfInt lam : {HalfInt::from_twice(-1), HalfInt::from_twice(1)})
      if (lam <= lambda_max) out.push_back(lam);
    return out;
  }
  auto lo = a0_min(sig);
  if (!lo) return out;
  for (HalfInt lam = *lo; lam <= lambda_max; ++lam) out.push_back(lam);
  return out;
}

bool a0_contains(Signature sig, HalfInt lambda) {
  if (sig.p == 1 && sig.q == 0) return lambda.twice() == -1 || lambda.twice() == 1;
  auto lo = a0_min(sig);
  return lo && lambda >= *lo && in_a0_lattice(sig, lambda);
}

VariantSets a_variant_sets(Signature sig, HalfInt cutoff) {
  VariantSets out;
  for (HalfInt lam : a0_set(sig, cutoff)) {
    if (lam > HalfInt(0)) out.a_plus.push_back(lam);
    if (lam > HalfInt(1)) out.a_prime.push_back(lam);
  }
  return out;
}

bool a_plus_contains(Signature sig, HalfInt lambda) {
  return lambda > HalfInt(0) && a0_contains(sig, lambda);
}

bool a_prime_contains(Signature sig, HalfInt lambda) {
  return lambda > HalfInt(1) && a0_contains(sig, lambda);
}

LambdaPairSets lambda_pair_sets(HalfInt lam, const SignatureSplit& split, HalfInt cutoff) {
  LambdaPairSets out;
  const Signature first{split.p1, split.q1};
  const Signature second_pm{split.q2, split.p2};
  const Signature second_pp{split.p2, split.q2};

  auto in_2n = [](HalfInt d) { return d.is_integer() && d.integer() >= 0 && d.integer() % 2 == 0; };

  for (HalfInt lp : a_variant_sets(first, cutoff).a_plus) {
    for (HalfInt lpp : a_variant_sets(second_pm, cutoff).a_plus)
      if (in_2n(lp - lpp - lam - HalfInt(1))) out.lambda_pm.emplace_back(lp, lpp);
    for (HalfInt lpp : a_variant_sets(second_pp, cutoff).a_plus)
      if (in_2n(lam - lp - lpp - HalfInt(1))) out.lambda_pp.emplace_back(lp, lpp);
  }
  auto by_pair = [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  };
  std::sort(out.lambda_pm.begin(), out.lambda_pm.end(), by_pair);
  std::sort(out.lambda_pp.begin(), out.lambda_pp.end(), by_pair);
  return out;
}

BEpsilonDelta b_epsilon_delta(HalfInt lam, Signature sig) {
  HalfInt b = lam - HalfInt::from_twice(sig.p) + HalfInt::from_twice(sig.q) + HalfInt(1);
  if (!b.is_integer())
    raise(errc::non_integral_b, "b = lambda - p/2 + q/2 + 1 = " + b.str() + " is not integral");
  BEpsilonDelta out;
  out.b = b;
  out.epsilon = (b.integer() % 2 == 0) ? 1 : -1;
  if ((sig.p + sig.q) % 2 == 0) {
    int e = (sig.p - sig.q) / 2;
    out.delta = (e % 2 == 0) ? 1 : -1;
  }
  return out;
}

int delta_character(Signature sig) {
  if ((sig.p + sig.q) % 2 != 0)
    raise(errc::delta_undefined, "delta = (-1)^{(p-q)/2} needs p+q even");
  return ((sig.p - sig.q) / 2) % 2 == 0 ? 1 : -1;
}

namespace {

HalfInt halve_or_raise(HalfInt x, const char* what) {
  if (x.twice() % 2 != 0)
    raise(errc::invalid_parameter,
          std::string(what) + ": Gamma argument " + x.str() + "/2 is not a half-integer");
  return HalfInt::from_twice(x.twice() / 2);
}

}  // namespace

GammaValue v_constant_exact(VKind kind, HalfInt lam_p, HalfInt lam_pp, HalfInt lam) {
  if (lam == HalfInt(0)) raise(errc::zero_lambda, "V is evaluated at lambda = 0");
  GammaValue lv = lambda_v_pm(lam_p, lam_pp, lam);
  if (kind == VKind::pm) {
    return lv / GammaValue(Rational(lam.twice(), 2));
  }
  // V^{++}(l', l''; l) = V^{+-} with l' |-> -l' in the two Gamma factors
  // that pair l' with +l, i.e. swap the roles below.
  const HalfInt one(1);
  GammaValue num = gamma_half(lam_pp + one).squared() *
                   gamma_half(halve_or_raise(-lam_p - lam_pp + lam + one, "V++")) *
                   gamma_half(halve_or_raise(lam_p - lam_pp + lam + one, "V++"));
  GammaValue den = GammaValue(Rational(lam.twice())) *  // 2*lambda
                   gamma_half(halve_or_raise(-lam_p + lam_pp + lam + one, "V++")) *
                   gamma_half(halve_or_raise(lam_p + lam_pp + lam + one, "V++"));
  return num / den;
}

GammaValue lambda_v_pm(HalfInt lam_p, HalfInt lam_pp, HalfInt lam) {
  const HalfInt one(1);
  GammaValue num = gamma_half(lam_pp + one).squared() *
                   gamma_half(halve_or_raise(lam_p - lam_pp + lam + one, "V+-")) *
                   gamma_half(halve_or_raise(lam_p - lam_pp - lam + one, "V+-"));
  GammaValue den = GammaValue(Rational(2)) *
                   gamma_half(halve_or_raise(lam_p + lam_pp + lam + one, "V+-")) *
                   gamma_half(halve_or_raise(lam_p + lam_pp - lam + one, "V+-"));
  return num / den;
}

GammaValue m_constant_exact(HalfInt lam, HalfInt lam_p, HalfInt lam_pp) {
  HalfInt e2 = lam_p - lam_pp - lam - HalfInt(1);  // twice the sign exponent
  if (!e2.is_integer() || e2.integer() % 2 != 0)
    raise(errc::sign_undefined,
          "M sign exponent (lambda'-lambda''-lambda-1)/2 = " + e2.str() + "/2 is not an integer");
  const std::int64_t expo = e2.integer() / 2;
  const HalfInt one(1);
  GammaValue num = gamma_half(halve_or_raise(lam_p + lam_pp - lam + one, "M")) * gamma_half(lam + one);
  GammaValue den = gamma_half(halve_or_raise(lam_p - lam_pp + lam + one, "M")) * gamma_half(lam_pp + one);
  GammaValue m = num / den;
  // (-1)^expo with expo possibly negative
  if (((expo % 2) + 2) % 2 == 1) m = -m;
  return m;
}

}  // namespace minrep::exact
