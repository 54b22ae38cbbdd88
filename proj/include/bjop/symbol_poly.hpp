#pragma once

#include <map>
#include <string>

#include "bjop/gaussian_rational.hpp"
#include "bjop/multi_index.hpp"

namespace bjop {

/// Commutative polynomial in x_1..x_n, xi_1..xi_n over Q(i), stored in
/// canonical form: at most one term per exponent pair, zero coefficients
/// never kept, graded-lex term order.  A polynomial without variables is
/// dimension-polymorphic: it combines with operands of any dimension.
class SymbolPoly {
 public:
  using TermMap = std::map<ExpKey, GaussianRational, GradedLex>;

  explicit SymbolPoly(int dim = 1);

  static SymbolPoly constant(const GaussianRational& c, int dim = 1);
  static SymbolPoly monomial(const GaussianRational& c, MultiIndex xexp, MultiIndex kexp);
  /// x_j / xi_j, 1-based index
  static SymbolPoly x(int j = 1, int dim = 1);
  static SymbolPoly xi(int j = 1, int dim = 1);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const TermMap& terms() const { return terms_; }
  GaussianRational coefficient(const ExpKey& key) const;
  GaussianRational constant_term() const;
  unsigned total_degree() const;
  unsigned x_degree() const;
  bool depends_only_on_x() const;
  bool depends_only_on_xi() const;

  void add_term(const ExpKey& key, const GaussianRational& c);

  SymbolPoly& operator+=(const SymbolPoly& o);
  SymbolPoly& operator-=(const SymbolPoly& o);
  friend SymbolPoly operator+(SymbolPoly a, const SymbolPoly& b) { return a += b; }
  friend SymbolPoly operator-(SymbolPoly a, const SymbolPoly& b) { return a -= b; }
  friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b);
  friend SymbolPoly operator-(const SymbolPoly& a);
  SymbolPoly scaled(const GaussianRational& c) const;
  SymbolPoly pow(unsigned e) const;

  /// Formal partial derivative with respect to x_j / xi_j (1-based).
  SymbolPoly partial_x(int j) const;
  SymbolPoly partial_xi(int j) const;

  bool operator==(const SymbolPoly& o) const;
  bool operator!=(const SymbolPoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  int dim_;
  TermMap terms_;

  SymbolPoly promoted(int newdim) const;
  static void align(SymbolPoly& a, SymbolPoly& b);

  friend SymbolPoly poisson_bracket(const SymbolPoly& a, const SymbolPoly& b);
};

/// {a,b} = sum_j d_{x_j}a d_{xi_j}b - d_{x_j}b d_{xi_j}a
SymbolPoly poisson_bracket(const SymbolPoly& a, const SymbolPoly& b);

}  // namespace bjop
