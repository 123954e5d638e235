#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minrep/gamma_value.hpp"
#include "minrep/halfint.hpp"

namespace minrep::exact {

// A0(p,q): the lattice of spectral parameters of the minimal elliptic
// representations, truncated at lambda <= lambda_max.  All four signature
// branches are honored, including A0(1,0) = {-1/2, 1/2} and the empty
// cases (p=1, q!=0) and (p=0).
std::vector<HalfInt> a0_set(Signature sig, HalfInt lambda_max);

bool a0_contains(Signature sig, HalfInt lambda);

struct VariantSets {
  std::vector<HalfInt> a_plus;   // A0 intersected with lambda > 0
  std::vector<HalfInt> a_prime;  // A0 intersected with lambda > 1
};

VariantSets a_variant_sets(Signature sig, HalfInt cutoff);

bool a_plus_contains(Signature sig, HalfInt lambda);
bool a_prime_contains(Signature sig, HalfInt lambda);

// Pairs (lambda', lambda'') feeding the norm constants:
//   Lambda_pm: from A+(p',q') x A+(q'',p''), lambda' - lambda'' - lambda - 1 in 2N
//   Lambda_pp: from A+(p',q') x A+(p'',q''), lambda - lambda' - lambda'' - 1 in 2N
struct LambdaPairSets {
  std::vector<std::pair<HalfInt, HalfInt>> lambda_pm;
  std::vector<std::pair<HalfInt, HalfInt>> lambda_pp;
};

LambdaPairSets lambda_pair_sets(HalfInt lam, const SignatureSplit& split, HalfInt cutoff);

struct BEpsilonDelta {
  HalfInt b;                 // b = lambda - p/2 + q/2 + 1
  int epsilon = 1;           // (-1)^b
  std::optional<int> delta;  // (-1)^{(p-q)/2}; present only when p+q is even
};

// Raises non_integral_b when b is not an integer.  delta is absent (not an
// error) for odd p+q; use delta_character when delta is required.
BEpsilonDelta b_epsilon_delta(HalfInt lam, Signature sig);

// (-1)^{(p-q)/2}; raises delta_undefined for odd p+q.
int delta_character(Signature sig);

enum class VKind { pm, pp };

// Closed-form norm constants of the Jacobi function integrals:
//   V^{+-}(l',l''; l) = Gamma(l''+1)^2 G((l'-l''+l+1)/2) G((l'-l''-l+1)/2)
//                       / (2l G((l'+l''+l+1)/2) G((l'+l''-l+1)/2))
//   V^{++}(l',l''; l) = Gamma(l''+1)^2 G((-l'-l''+l+1)/2) G((l'-l''+l+1)/2)
//                       / (2l G((-l'+l''+l+1)/2) G((l'+l''+l+1)/2))
// Poles and zeros are reported in-band through the GammaValue.  lambda = 0
// is rejected (zero_lambda); lambda*V stays finite there, see lambda_v_pm.
GammaValue v_constant_exact(VKind kind, HalfInt lam_p, HalfInt lam_pp, HalfInt lam);

// lambda * V^{+-}(lambda', lambda''; lambda), evaluated as a single product
// so that lambda = 0 is allowed (the 2*lambda denominator folds to 2).
GammaValue lambda_v_pm(HalfInt lam_p, HalfInt lam_pp, HalfInt lam);

// Signed proportionality constant of the triangular relation:
//   M(l,l',l'') = (-1)^{(l'-l''-l-1)/2}
//                 G((l'+l''-l+1)/2) G(l+1) / (G((l'-l''+l+1)/2) G(l''+1)).
// The sign exponent must be an integer (sign_undefined otherwise).
GammaValue m_constant_exact(HalfInt lam, HalfInt lam_p, HalfInt lam_pp);

}  // namespace minrep::exact
