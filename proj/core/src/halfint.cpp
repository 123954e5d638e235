#include "minrep/halfint.hpp"

#include <ostream>

namespace minrep {

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

std::ostream& operator<<(std::ostream& os, const Signature& s) {
  return os << "(" << s.p << "," << s.q << ")";
}

SignatureSplit make_split(Signature parent, int p1, int q1, int p2, int q2) {
  if (p1 < 0 || q1 < 0 || p2 < 0 || q2 < 0 || p1 + p2 != parent.p || q1 + q2 != parent.q)
    raise(errc::signature_mismatch, "split does not partition the parent signature");
  return SignatureSplit{p1, q1, p2, q2};
}

std::ostream& operator<<(std::ostream& os, const SignatureSplit& s) {
  return os << "(" << s.p1 << "," << s.q1 << "|" << s.p2 << "," << s.q2 << ")";
}

}  // namespace minrep
