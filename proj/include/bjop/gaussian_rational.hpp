#pragma once

#include <complex>
#include <string>
#include <utility>

#include "bjop/rational.hpp"

namespace bjop {

/// Exact complex number with rational real and imaginary parts: the field
/// Q(i).  All arithmetic is exact; there is no rounding anywhere in this
/// type.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long long r) : re(r) {}            // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_imaginary() const { return re == 0 && im != 0; }

  GaussianRational conj() const { return {re, -im}; }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw DivideByZeroError();
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }
};

inline GaussianRational conj(const GaussianRational& a) { return a.conj(); }

// i^k, period four
inline GaussianRational i_pow(unsigned k) {
  switch (k % 4) {
    case 0: return {1};
    case 1: return GaussianRational::i();
    case 2: return {-1};
    default: return -GaussianRational::i();
  }
}

inline GaussianRational minus_i_pow(unsigned k) {
  GaussianRational v = i_pow(k);
  return (k % 2 == 0) ? v : -v;
}

/// Rendering used by the polynomial printers.  Standalone form:
///   3/2, -1, i, -2/3*i, (1/2 - 1/3*i)
/// The mixed case is parenthesized so it can re-enter the expression
/// grammar as a single atom.
std::string to_string(const GaussianRational& c);

}  // namespace bjop
