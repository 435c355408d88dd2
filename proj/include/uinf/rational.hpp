#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace uinf {

// Exact arithmetic scalars. cpp_rational keeps values reduced with a
// positive denominator, so the canonical-form invariants hold for free.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Generalized binomial coefficient: binom(a,m) = a(a-1)...(a-m+1)/m! for
/// any integer a (negative tops included) and m >= 0; binom(a,0) = 1.
inline Rational binom(long long a, long long m) {
  if (m < 0) return Rational(0);
  Integer num = 1;
  Integer den = 1;
  for (long long i = 0; i < m; ++i) {
    num *= Integer(a - i);
    den *= Integer(i + 1);
  }
  return Rational(num, den);
}

inline int parity_sign(long long n) { return (n % 2 == 0) ? 1 : -1; }

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace uinf
