#pragma once

#include <string>
#include <vector>

#include "bjop/op_poly.hpp"
#include "bjop/symbol_poly.hpp"

namespace bjop {

struct QuantizationRule {
  enum class Kind { Weyl, Tau, BornJordan };

  Kind kind = Kind::BornJordan;
  Rational tau = Rational(1, 2);  // meaningful only for Kind::Tau

  static QuantizationRule weyl() { return {Kind::Weyl, Rational(1, 2)}; }
  static QuantizationRule born_jordan() { return {Kind::BornJordan, Rational(1, 2)}; }
  static QuantizationRule shubin(Rational t) { return {Kind::Tau, std::move(t)}; }

  std::string name() const;
};

/// "bj", "weyl" or "tau=<p/q>"; throws Error on anything else.
QuantizationRule parse_rule(const std::string& s);

/// Polynomial in the formal ordering parameter tau whose coefficients are
/// operator polynomials.  Intermediate object of the quantization maps:
/// the tau-degree never exceeds the x-degree of the source symbol.
class TauPoly {
 public:
  explicit TauPoly(int dim = 1);

  static TauPoly constant_op(const OpPoly& op);
  /// op * tau^tau_degree
  static TauPoly monomial_op(const OpPoly& op, unsigned tau_degree);

  int dim() const { return dim_; }
  unsigned degree() const;  // 0 for the zero polynomial
  OpPoly coeff(unsigned m) const;

  TauPoly& operator+=(const TauPoly& o);
  friend TauPoly operator*(const TauPoly& a, const TauPoly& b);
  TauPoly scaled(const GaussianRational& c) const;

  OpPoly evaluate(const Rational& tau) const;
  /// termwise int_0^1 tau^m dtau = 1/(m+1)
  OpPoly integrate01() const;
  /// substitute tau -> 1-tau
  TauPoly mirrored() const;

 private:
  int dim_;
  std::vector<OpPoly> c_;  // c_[m] multiplies tau^m
  void trim();
};

/// Shubin tau-quantization with the formal parameter left symbolic.
/// For a 1-D monomial x^r xi^s the expansion is
///     sum_k C(r,k) (1-tau)^k tau^(r-k) x^k D^s x^(r-k)
/// (the kernel a((1-tau)x + tau y, xi) convention, so tau = 0 places all
/// position factors on the left); for n > 1 the per-coordinate expansions
/// at the same tau are multiplied.
TauPoly quantize_tau_formal(const SymbolPoly& a);

OpPoly quantize_tau(const SymbolPoly& a, const Rational& tau);
OpPoly quantize_weyl(const SymbolPoly& a);

/// Average of the tau-quantizations over tau in [0,1], integrated exactly;
/// on 1-D monomials this is the equal-weight ordering sum
///     (1/(r+1)) sum_k x^k D^s x^(r-k).
OpPoly quantize_bj(const SymbolPoly& a);

OpPoly quantize(const SymbolPoly& a, const QuantizationRule& rule);

/// The commutator route to the same operator:
///     (1/(i(r+1)(s+1))) [x^(r+1), D^(s+1)]  ==  quantize_bj(x^r xi^s).
OpPoly bj_via_commutator(unsigned r, unsigned s);

}  // namespace bjop
