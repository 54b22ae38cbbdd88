#pragma once

#include <map>
#include <string>
#include <vector>

#include "bjop/gaussian_rational.hpp"
#include "bjop/multi_index.hpp"

namespace bjop {

/// Normal-ordered noncommutative operator polynomial
///     sum_{a,b} c_{a,b} x^a D^b,   D_j = -i d/dx_j,
/// with every position factor to the left of every derivative factor.
/// Canonical form (one term per exponent pair, zero coefficients elided)
/// makes equality a term-wise comparison.
class OpPoly {
 public:
  using TermMap = std::map<ExpKey, GaussianRational, GradedLex>;

  explicit OpPoly(int dim = 1);

  static OpPoly constant(const GaussianRational& c, int dim = 1);
  static OpPoly identity(int dim = 1) { return constant(1, dim); }
  static OpPoly monomial(const GaussianRational& c, MultiIndex xexp, MultiIndex dexp);
  /// 1-D words x^r and D^s
  static OpPoly x_power(unsigned r);
  static OpPoly d_power(unsigned s);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const TermMap& terms() const { return terms_; }
  GaussianRational coefficient(const ExpKey& key) const;
  GaussianRational constant_term() const;
  unsigned total_degree() const;

  void add_term(const ExpKey& key, const GaussianRational& c);

  OpPoly& operator+=(const OpPoly& o);
  OpPoly& operator-=(const OpPoly& o);
  friend OpPoly operator+(OpPoly a, const OpPoly& b) { return a += b; }
  friend OpPoly operator-(OpPoly a, const OpPoly& b) { return a -= b; }
  friend OpPoly operator-(const OpPoly& a);
  OpPoly scaled(const GaussianRational& c) const;

  bool operator==(const OpPoly& o) const;
  bool operator!=(const OpPoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  int dim_;
  TermMap terms_;

  OpPoly promoted(int newdim) const;
  static void align(OpPoly& a, OpPoly& b);

  friend OpPoly op_mul(const OpPoly& A, const OpPoly& B);
};

/// Product in normal order.  Per coordinate the rewrite is the closed form
///     D^b x^a = sum_k  C(b,k) a!/(a-k)! (-i)^k  x^(a-k) D^(b-k),
/// applied term by term; factors with distinct indices commute.
OpPoly op_mul(const OpPoly& A, const OpPoly& B);

/// AB - BA, normal-ordered.
OpPoly op_commutator(const OpPoly& A, const OpPoly& B);

/// Formal adjoint with respect to the L2 pairing: reverses each word
/// x^a D^b to D^b x^a, conjugates coefficients, and renormal-orders.
OpPoly op_adjoint(const OpPoly& A);

/// Univariate polynomial in x over Q(i), as a coefficient list
/// (c_[k] multiplies x^k).  Test-oracle companion of OpPoly.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<GaussianRational> coeffs);

  static XPoly x_power(unsigned m);
  static XPoly constant(const GaussianRational& c);

  const std::vector<GaussianRational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  GaussianRational coefficient(unsigned k) const;

  XPoly& operator+=(const XPoly& o);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  XPoly scaled(const GaussianRational& c) const;

  bool operator==(const XPoly& o) const { return c_ == o.c_; }
  bool operator!=(const XPoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::vector<GaussianRational> c_;
  void trim();
};

/// Exact action of a 1-D operator polynomial on u(x): x acts by
/// multiplication, D by -i d/dx.  Implemented directly on coefficient
/// lists, independent of op_mul, so the two can check each other.
XPoly op_apply_poly(const OpPoly& A, const XPoly& u);

}  // namespace bjop
