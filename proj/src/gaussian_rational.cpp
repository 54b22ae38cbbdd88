#include "bjop/gaussian_rational.hpp"

namespace bjop {

std::string to_string(const GaussianRational& c) {
  if (c.is_zero()) return "0";
  if (c.is_real()) return to_string(c.re);
  auto imag_part = [](const Rational& q) -> std::string {
    if (q == 1) return "i";
    return to_string(q) + "*i";
  };
  if (c.is_imaginary()) {
    if (c.im == -1) return "-i";
    return imag_part(c.im);
  }
  std::string s = "(" + to_string(c.re);
  s += (c.im > 0) ? " + " : " - ";
  Rational mag = c.im > 0 ? c.im : Rational(-c.im);
  s += imag_part(mag) + ")";
  return s;
}

}  // namespace bjop
