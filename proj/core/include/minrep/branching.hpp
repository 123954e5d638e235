#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minrep/halfint.hpp"
#include "minrep/harmonics.hpp"

namespace minrep::branching {

enum class RepKind {
  pi_plus,   // minimal elliptic family on X(p,q)
  pi_minus,  // mirror family on O(p,q)/O(p,q-1)
  minrep,    // the minimal representation
  harmonic,  // H^l(R^q) of a compact factor
  principal_constituent,
  trivial,
  sgn,
};

// Structural label for the representations appearing in branching laws.
// Equality is structural: kind, signature, parameter.
struct RepLabel {
  RepKind kind = RepKind::trivial;
  Signature sig;
  std::optional<HalfInt> lam;
  std::optional<int> degree;  // for harmonic labels

  // Factories validate the parameter against A0 and normalize degenerate
  // signatures: (1,0) and (0,1) collapse to the O(1) table, (p,0)/(0,q)
  // to spherical harmonics.
  static RepLabel pi_plus(Signature sig, HalfInt lam);
  static RepLabel pi_minus(Signature sig, HalfInt lam);
  static RepLabel minimal(Signature sig);
  static RepLabel harmonic(int degree, int ambient_dim);
  static RepLabel make_trivial();
  static RepLabel make_sgn();

  bool is_zero() const {
    return kind == RepKind::harmonic && degree &&
           (*degree < 0 || harmonics::dim_harmonic({*degree, sig.p}) == 0);
  }

  std::string str() const;

  friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

enum class Status { theorem, conjecture };

struct Summand {
  RepLabel left;
  RepLabel right;
  int multiplicity = 1;
  std::optional<HalfInt> lambda;
  Status status = Status::theorem;
};

// K-type lattice of pi^{p,q}_{+,lambda}: pairs (m,n) with m-n >= b and
// m-n == b mod 2.
struct KTypeSet {
  Signature sig;
  HalfInt b;  // must be integral

  bool contains(int m, int n) const;
  // Sum of dim H^m(R^p) * dim H^n(R^q) over members with m <= m_max.
  std::int64_t truncated_dimension(int m_max) const;
  std::vector<std::pair<int, int>> members(int m_max) const;
};

// Criterion for discrete decomposability of the restriction to
// O(p',q') x O(p'',q''): min(p',q',p'',q'') = 0.  Hypotheses: p, q >= 2 and
// p+q even (hypothesis_violated otherwise).
bool discretely_decomposable(const SignatureSplit& split);

// Restriction to O(p,q') x O(q''): summands
// pi^{p,q'}_{+, l+q''/2-1} (x) H^l(R^{q''}) for l = 0..l_max.  Zero right
// factors (q''=1, l >= 2) are dropped, so q''=1 yields exactly the two
// summands of the two-term decomposition.
std::vector<Summand> branch_compact(int p, int q_prime, int q_doubleprime, int l_max);

// Discrete summands in the restriction to O(p',q') x O(p'',q''):
//   lambda in A'(p',q') cap A'(q'',p''):  pi+^{p',q'}(lambda) (x) pi-^{p'',q''}(lambda)
//   lambda in A'(q',p') cap A'(p'',q''):  pi-^{p',q'}(lambda) (x) pi+^{p'',q''}(lambda)
// `conjectural_a0` switches A' to A0 and marks the extra summands as
// conjecture (the conjectured full discrete spectrum).
std::vector<Summand> branch_noncompact_discrete(const SignatureSplit& split, HalfInt cutoff,
                                                bool conjectural_a0 = false);

// Discrete-spectrum parameters of the compact case missed by the purely
// geometric construction (p''=0, q'=0): tabulated for q'' <= 4, empty from
// q'' >= 5 on.
std::vector<HalfInt> missing_parameters_compact_case(int q_prime, int q_doubleprime);

// K'-structure of the minimal representation under O(p) x O(q') x O(q''):
// pairs (Xi(O(p) x O(q') : (q-p)/2 + l), H^l(R^{q''})) for l = 0..l_max.
std::vector<std::pair<KTypeSet, harmonics::HarmonicLabel>> kprime_decomposition(
    Signature sig, int q_prime, int q_doubleprime, int l_max);

using CMatrix = std::vector<std::vector<std::complex<double>>>;

// Membership tests for the matrix models of the nilpotent varieties:
// M_{0,0} = {X : X X^t = 0 and X^t X = 0}, and the nilpotent cone
// {X : both X X^t and X^t X nilpotent}.
bool in_m00_variety(const CMatrix& X);
bool in_nilpotent_cone(const CMatrix& X);

// Rank-one demo matrix of the associated-variety obstruction: verifies that
// X = E(1,1) - E(p'+1,q'+1) + i E(p'+1,1) + i E(1,q'+1) lies in M_{0,0},
// projects to the diagonal blocks, and tests nilpotency of each block.
struct AssociatedVarietyDemo {
  bool x_in_variety = false;
  std::pair<bool, bool> projections_nilpotent = {false, false};
};

AssociatedVarietyDemo associated_variety_demo(const SignatureSplit& split);

// Asymptotic K-support: a ray (or two for p = 2) in the weight lattice,
// described by generator indices, plus the supporting weight pairs
// {a f_1 + b f_([p/2]+1) : a + p/2 = b + q/2}.
struct KSupportRay {
  int f1_sign = 1;       // coefficient sign on f_1
  int second_index = 2;  // index of the second basis vector, [p/2]+1
};

struct AsymptoticKSupport {
  Signature sig;
  std::vector<KSupportRay> rays;
  // weight pairs (a, b) with a + p/2 = b + q/2, a = 0..a_max
  std::vector<std::pair<int, int>> support_pairs(int a_max) const;
};

AsymptoticKSupport asymptotic_k_support(Signature sig);

// Composition series data of the degenerate principal series at the
// tabulated parameters lambda in {-1, -1/2, 0, 1/2, 1}.
struct CompositionSeries {
  HalfInt lambda;
  // the character epsilon = (-1)^{exponent}; exponent is (p-q+-1)/2 or
  // (p-q)/2, (p-q+2)/2 depending on the case
  std::int64_t epsilon_exponent = 0;
  std::vector<RepLabel> sub;
  std::vector<RepLabel> quotient;
  bool splits = false;  // true for the direct-sum case lambda = 0
};

std::vector<CompositionSeries> composition_series(HalfInt lam, Signature sig);

enum class SpectrumClass {
  DiscretelyDecomposable,
  FiniteDiscreteConjectured,
  NoDiscreteConjectured,
  InfiniteDiscrete,
};

struct Classification {
  SpectrumClass cls = SpectrumClass::InfiniteDiscrete;
  bool conjectural = false;
  std::string reason;
};

// Classification by the three predicates, in priority order:
// min of all four parts = 0, then the no-discrete locus, then the
// finite-discrete locus, else infinitely many discrete summands.
Classification spectrum_classification(const SignatureSplit& split);

const char* spectrum_class_name(SpectrumClass cls);

// Static root-system bookkeeping for the theta-stable parabolic defining
// pi^{p,q}_{+,lambda}: rho(u) = ((p+q)/2 - 1) f_1 and the admissible ranges.
struct RootSystemData {
  Signature sig;
  HalfInt rho_u_coefficient() const { return HalfInt::from_twice(sig.p + sig.q - 2); }
  bool good_range(HalfInt lam) const { return lam > rho_u_coefficient() - HalfInt(1); }
  bool weakly_fair_range(HalfInt lam) const { return lam >= HalfInt(0); }
};

}  // namespace minrep::branching
