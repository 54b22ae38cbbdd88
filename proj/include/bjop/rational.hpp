#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "bjop/errors.hpp"

namespace bjop {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept in lowest terms with positive
// denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;

// num/den with sign normalization; throws on zero denominator.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivideByZeroError();
  return Rational(num) / Rational(den);
}

inline Rational make_rational(long long num, long long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational rational_pow(const Rational& q, unsigned e) {
  Rational r(1);
  for (unsigned k = 0; k < e; ++k) r *= q;
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r(1);
  for (unsigned j = 1; j <= k; ++j) {
    r *= n - (k - j);
    r /= j;  // exact: r is always an integer binomial prefix
  }
  return r;
}

// n (n-1) ... (n-k+1)
inline BigInt falling_factorial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r(1);
  for (unsigned j = 0; j < k; ++j) r *= n - j;
  return r;
}

}  // namespace bjop
