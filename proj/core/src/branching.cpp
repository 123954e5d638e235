#include "minrep/branching.hpp"

#include <algorithm>

#include "minrep/param_sets.hpp"

namespace minrep::branching {

using exact::a0_contains;
using exact::a0_set;
using exact::a_prime_contains;

RepLabel RepLabel::pi_plus(Signature sig, HalfInt lam) {
  if (!a0_contains(sig, lam))
    raise(errc::invalid_parameter,
          "pi_plus parameter " + lam.str() + " is not in A0 of the signature");
  if (sig.p == 1 && sig.q == 0) return lam.twice() == -1 ? make_trivial() : make_sgn();
  if (sig.q == 0) {
    // pi^{p,0}_{+,lambda} is the space of degree-k spherical harmonics
    auto k = (lam - HalfInt::from_twice(sig.p - 2)).integer();
    return harmonic(static_cast<int>(k), sig.p);
  }
  return RepLabel{RepKind::pi_plus, sig, lam, std::nullopt};
}

RepLabel RepLabel::pi_minus(Signature sig, HalfInt lam) {
  if (!a0_contains(Signature{sig.q, sig.p}, lam))
    raise(errc::invalid_parameter,
          "pi_minus parameter " + lam.str() + " is not in A0 of the swapped signature");
  if (sig.p == 0 && sig.q == 1) return lam.twice() == -1 ? make_trivial() : make_sgn();
  if (sig.p == 0) {
    auto l = (lam - HalfInt::from_twice(sig.q - 2)).integer();
    return harmonic(static_cast<int>(l), sig.q);
  }
  return RepLabel{RepKind::pi_minus, sig, lam, std::nullopt};
}

RepLabel RepLabel::minimal(Signature sig) {
  return RepLabel{RepKind::minrep, sig, std::nullopt, std::nullopt};
}

RepLabel RepLabel::harmonic(int degree, int ambient_dim) {
  if (ambient_dim == 1 && degree >= 0 && degree <= 1)
    return degree == 0 ? make_trivial() : make_sgn();
  return RepLabel{RepKind::harmonic, Signature{ambient_dim, 0}, std::nullopt, degree};
}

RepLabel RepLabel::make_trivial() { return RepLabel{RepKind::trivial, Signature{1, 0}, {}, {}}; }
RepLabel RepLabel::make_sgn() { return RepLabel{RepKind::sgn, Signature{1, 0}, {}, {}}; }

std::string RepLabel::str() const {
  switch (kind) {
    case RepKind::pi_plus:
      return "pi+{" + std::to_string(sig.p) + "," + std::to_string(sig.q) + "}(" + lam->str() + ")";
    case RepKind::pi_minus:
      return "pi-{" + std::to_string(sig.p) + "," + std::to_string(sig.q) + "}(" + lam->str() + ")";
    case RepKind::minrep:
      return "minrep{" + std::to_string(sig.p) + "," + std::to_string(sig.q) + "}";
    case RepKind::harmonic:
      return "H^" + std::to_string(*degree) + "(R^" + std::to_string(sig.p) + ")";
    case RepKind::principal_constituent:
      return "principal{" + std::to_string(sig.p) + "," + std::to_string(sig.q) + "}(" +
             lam->str() + ")";
    case RepKind::trivial:
      return "1";
    case RepKind::sgn:
      return "sgn";
  }
  return "?";
}

bool KTypeSet::contains(int m, int n) const {
  if (m < 0 || n < 0 || !b.is_integer()) return false;
  auto bb = b.integer();
  return m - n >= bb && (m - n - bb) % 2 == 0;
}

std::vector<std::pair<int, int>> KTypeSet::members(int m_max) const {
  std::vector<std::pair<int, int>> out;
  for (int m = 0; m <= m_max; ++m)
    for (int n = 0; m - n >= b.integer(); ++n)
      if (contains(m, n)) out.emplace_back(m, n);
  return out;
}

std::int64_t KTypeSet::truncated_dimension(int m_max) const {
  std::int64_t total = 0;
  for (auto [m, n] : members(m_max))
    total += harmonics::dim_harmonic({m, sig.p}) * harmonics::dim_harmonic({n, sig.q});
  return total;
}

bool discretely_decomposable(const SignatureSplit& split) {
  const Signature parent = split.parent();
  if (parent.p < 2 || parent.q < 2 || (parent.p + parent.q) % 2 != 0)
    raise(errc::hypothesis_violated, "criterion needs p, q >= 2 and p+q even");
  return split.min_part() == 0;
}

std::vector<Summand> branch_compact(int p, int q_prime, int q_doubleprime, int l_max) {
  const int q = q_prime + q_doubleprime;
  if (p < 2 || q_doubleprime < 1 || q_prime < 0 || (p + q) % 2 != 0)
    raise(errc::hypothesis_violated, "branch_compact needs p >= 2, q'' >= 1, p+q even");
  std::vector<Summand> out;
  for (int l = 0; l <= l_max; ++l) {
    HalfInt lam = HalfInt::from_twice(2 * l + q_doubleprime - 2);  // l + q''/2 - 1
    RepLabel right = RepLabel::harmonic(l, q_doubleprime);
    if (right.is_zero()) continue;  // H^l(R^1) = 0 for l >= 2
    if (q_prime == 0 && !a0_contains(Signature{p, 0}, lam)) continue;  // zero left factor
    RepLabel left = RepLabel::pi_plus(Signature{p, q_prime}, lam);
    out.push_back(Summand{left, right, 1, lam, Status::theorem});
  }
  return out;
}

std::vector<Summand> branch_noncompact_discrete(const SignatureSplit& split, HalfInt cutoff,
                                                bool conjectural_a0) {
  const Signature parent = split.parent();
  if (parent.p < 2 || parent.q < 2 || (parent.p + parent.q) % 2 != 0 ||
      (parent.p == 2 && parent.q == 2))
    raise(errc::hypothesis_violated,
          "needs p >= 2, q >= 2, p+q even and (p,q) != (2,2)");
  const Signature f1{split.p1, split.q1}, f1m{split.q1, split.p1};
  const Signature f2p{split.p2, split.q2}, f2m{split.q2, split.p2};

  std::vector<Summand> out;
  for (HalfInt lam : a0_set(f1, cutoff)) {
    if (!a0_contains(f2m, lam)) continue;
    bool theorem = a_prime_contains(f1, lam) && a_prime_contains(f2m, lam);
    if (!theorem && !conjectural_a0) continue;
    out.push_back(Summand{RepLabel::pi_plus(f1, lam), RepLabel::pi_minus(f2p, lam), 1, lam,
                          theorem ? Status::theorem : Status::conjecture});
  }
  for (HalfInt lam : a0_set(f1m, cutoff)) {
    if (!a0_contains(f2p, lam)) continue;
    bool theorem = a_prime_contains(f1m, lam) && a_prime_contains(f2p, lam);
    if (!theorem && !conjectural_a0) continue;
    out.push_back(Summand{RepLabel::pi_minus(f1, lam), RepLabel::pi_plus(f2p, lam), 1, lam,
                          theorem ? Status::theorem : Status::conjecture});
  }
  std::stable_sort(out.begin(), out.end(), [](const Summand& a, const Summand& b) {
    return *a.lambda < *b.lambda;
  });
  return out;
}

std::vector<HalfInt> missing_parameters_compact_case(int q_prime, int q_doubleprime) {
  if (q_prime != 0 || q_doubleprime < 1)
    raise(errc::hypothesis_violated, "table covers the case p'' = 0, q' = 0 only");
  switch (q_doubleprime) {
    case 1:
      return {HalfInt::from_twice(-1), HalfInt::from_twice(1)};
    case 2:
      return {HalfInt(0), HalfInt(1)};
    case 3:
      return {HalfInt::from_twice(1)};
    case 4:
      return {HalfInt(1)};
    default:
      return {};
  }
}

std::vector<std::pair<KTypeSet, harmonics::HarmonicLabel>> kprime_decomposition(
    Signature sig, int q_prime, int q_doubleprime, int l_max) {
  if (q_prime < 1 || q_doubleprime < 1 || q_prime + q_doubleprime != sig.q)
    raise(errc::hypothesis_violated, "needs q' >= 1, q'' >= 1, q' + q'' = q");
  if ((sig.p + sig.q) % 2 != 0)
    raise(errc::hypothesis_violated, "K'-structure of the minimal representation needs p+q even");
  std::vector<std::pair<KTypeSet, harmonics::HarmonicLabel>> out;
  for (int l = 0; l <= l_max; ++l) {
    HalfInt b = HalfInt::from_twice(sig.q - sig.p) + HalfInt(l);  // (q-p)/2 + l
    out.emplace_back(KTypeSet{Signature{sig.p, q_prime}, b},
                     harmonics::HarmonicLabel{l, q_doubleprime});
  }
  return out;
}

namespace {

using Complex = std::complex<double>;

CMatrix zeros(int r, int c) { return CMatrix(r, std::vector<Complex>(c)); }

CMatrix multiply(const CMatrix& A, const CMatrix& B) {
  int r = A.size(), k = B.size(), c = B[0].size();
  CMatrix out = zeros(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      for (int t = 0; t < k; ++t) out[i][j] += A[i][t] * B[t][j];
  return out;
}

CMatrix transpose(const CMatrix& A) {
  int r = A.size(), c = A[0].size();
  CMatrix out = zeros(c, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) out[j][i] = A[i][j];
  return out;
}

bool is_zero_matrix(const CMatrix& A) {
  for (const auto& row : A)
    for (const Complex& v : row)
      if (std::abs(v) > 1e-12) return false;
  return true;
}

bool is_nilpotent(const CMatrix& A) {
  CMatrix power = A;
  for (std::size_t k = 1; k < A.size(); ++k) power = multiply(power, A);
  return is_zero_matrix(power);
}

CMatrix block(const CMatrix& X, int r0, int r1, int c0, int c1) {
  CMatrix out = zeros(r1 - r0, c1 - c0);
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) out[i - r0][j - c0] = X[i][j];
  return out;
}

}  // namespace

bool in_m00_variety(const CMatrix& X) {
  return is_zero_matrix(multiply(X, transpose(X))) &&
         is_zero_matrix(multiply(transpose(X), X));
}

bool in_nilpotent_cone(const CMatrix& X) {
  return is_nilpotent(multiply(X, transpose(X))) && is_nilpotent(multiply(transpose(X), X));
}

AssociatedVarietyDemo associated_variety_demo(const SignatureSplit& split) {
  if (split.p1 * split.q1 * split.p2 * split.q2 == 0)
    raise(errc::hypothesis_violated, "the demo matrix needs all four split parts nonzero");
  const Signature parent = split.parent();
  const Complex i(0.0, 1.0);
  CMatrix X = zeros(parent.p, parent.q);
  X[0][0] = 1.0;
  X[split.p1][split.q1] = -1.0;
  X[split.p1][0] = i;
  X[0][split.q1] = i;

  AssociatedVarietyDemo out;
  out.x_in_variety = in_m00_variety(X);
  CMatrix X1 = block(X, 0, split.p1, 0, split.q1);
  CMatrix X4 = block(X, split.p1, parent.p, split.q1, parent.q);
  out.projections_nilpotent = {in_nilpotent_cone(X1), in_nilpotent_cone(X4)};
  return out;
}

std::vector<std::pair<int, int>> AsymptoticKSupport::support_pairs(int a_max) const {
  std::vector<std::pair<int, int>> out;
  if ((sig.p + sig.q) % 2 != 0) return out;
  int shift = (sig.p - sig.q) / 2;  // b = a + (p-q)/2
  for (int a = 0; a <= a_max; ++a) {
    int b = a + shift;
    if (b >= 0) out.emplace_back(a, b);
  }
  return out;
}

AsymptoticKSupport asymptotic_k_support(Signature sig) {
  AsymptoticKSupport out;
  out.sig = sig;
  int second = sig.p / 2 + 1;  // [p/2] + 1
  if (sig.p == 2) {
    out.rays = {KSupportRay{+1, second}, KSupportRay{-1, second}};
  } else {
    out.rays = {KSupportRay{+1, second}};
  }
  return out;
}

std::vector<CompositionSeries> composition_series(HalfInt lam, Signature sig) {
  const auto [p, q] = sig;
  const bool odd = (p + q) % 2 != 0;
  std::vector<CompositionSeries> out;
  auto piP = [&](HalfInt l) { return RepLabel::pi_plus(sig, l); };
  auto piM = [&](HalfInt l) { return RepLabel::pi_minus(sig, l); };
  const HalfInt half = HalfInt::half(), mhalf = -HalfInt::half();

  if (odd && (lam == mhalf || lam == half)) {
    if (lam == mhalf) {
      out.push_back({lam, (p - q + 1) / 2, {piM(mhalf)}, {piP(half)}, false});
      out.push_back({lam, (p - q - 1) / 2, {piP(mhalf)}, {piM(half)}, false});
    } else {
      out.push_back({lam, (p - q + 1) / 2, {piP(half)}, {piM(mhalf)}, false});
      out.push_back({lam, (p - q - 1) / 2, {piM(half)}, {piP(mhalf)}, false});
    }
    return out;
  }
  if (!odd && lam == HalfInt(-1)) {
    out.push_back({lam, (p - q) / 2, {RepLabel::minimal(sig)}, {piM(HalfInt(1)), piP(HalfInt(1))},
                   false});
    return out;
  }
  if (!odd && lam == HalfInt(1)) {
    out.push_back({lam, (p - q) / 2, {piM(HalfInt(1)), piP(HalfInt(1))}, {RepLabel::minimal(sig)},
                   false});
    return out;
  }
  if (!odd && lam == HalfInt(0)) {
    out.push_back({lam, (p - q + 2) / 2, {piM(HalfInt(0))}, {piP(HalfInt(0))}, true});
    return out;
  }
  raise(errc::not_tabulated,
        "composition series tabulated for lambda in {-1, -1/2, 0, 1/2, 1} with matching parity");
}

Classification spectrum_classification(const SignatureSplit& split) {
  const Signature parent = split.parent();
  if (parent.p < 2 || parent.q < 2 || (parent.p + parent.q) % 2 != 0)
    raise(errc::hypothesis_violated, "classification needs p, q >= 2 and p+q even");
  const bool cap_small =
      std::min(split.p1, split.q2) <= 1 && std::min(split.q1, split.p2) <= 1;  // (9.8.1)
  if (split.min_part() == 0)
    return {SpectrumClass::DiscretelyDecomposable, false, "min(p',q',p'',q'') = 0"};
  if (cap_small && split.p1 + split.q1 > 1 && split.p2 + split.q2 > 1)
    return {SpectrumClass::NoDiscreteConjectured, true,
            "min(p',q'') <= 1, min(q',p'') <= 1, both factors of rank > 1"};
  if (cap_small)
    return {SpectrumClass::FiniteDiscreteConjectured, true,
            "min(p',q'') <= 1 and min(q',p'') <= 1"};
  return {SpectrumClass::InfiniteDiscrete, false, "discrete families are nonempty"};
}

const char* spectrum_class_name(SpectrumClass cls) {
  switch (cls) {
    case SpectrumClass::DiscretelyDecomposable:
      return "DiscretelyDecomposable";
    case SpectrumClass::FiniteDiscreteConjectured:
      return "FiniteDiscreteConjectured";
    case SpectrumClass::NoDiscreteConjectured:
      return "NoDiscreteConjectured";
    case SpectrumClass::InfiniteDiscrete:
      return "InfiniteDiscrete";
  }
  return "?";
}

}  // namespace minrep::branching
