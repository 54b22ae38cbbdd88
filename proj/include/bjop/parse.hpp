#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bjop/symbol_poly.hpp"

namespace bjop {

/// Surface syntax for symbols a(x,xi):
///   expr   := term (("+"|"-") term)* ;
///   term   := factor ("*" factor)* ;
///   factor := atom ("^" uint)? ;
///   atom   := rational | "i" | var | "(" expr ")" | "-" atom ;
///   var    := "x" index? | "xi" index? ;      index defaults to 1
///   rational := int ("/" uint)?
/// Whitespace is insignificant; juxtaposition is not multiplication.
struct SymbolExpr {
  enum class Kind { Rational, ImagUnit, VarX, VarXi, Sum, Product, Power, Negation };

  Kind kind = Kind::Rational;
  ::bjop::Rational value;            // Kind::Rational
  int index = 1;                     // Kind::VarX / VarXi, 1-based
  unsigned exponent = 0;             // Kind::Power
  std::vector<SymbolExpr> children;  // Sum/Product operands, Power/Negation operand
};

/// Throws ParseError (with byte offset) on syntax errors and on variable
/// indices exceeding dim.
SymbolExpr parse_symbol(std::string_view src, int dim);

/// Total on well-formed ASTs.
SymbolPoly lower(const SymbolExpr& expr, int dim);

inline SymbolPoly parse_symbol_poly(std::string_view src, int dim) {
  return lower(parse_symbol(src, dim), dim);
}

}  // namespace bjop
