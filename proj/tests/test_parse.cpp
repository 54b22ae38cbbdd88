#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "bjop/errors.hpp"
#include "bjop/parse.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bjop;

namespace {

std::size_t offset_of(const char* src, int dim) {
  try {
    parse_symbol(src, dim);
  } catch (const ParseError& e) {
    return e.offset;
  }
  FAIL("expected a parse error for: ", src);
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("basic expressions") {
  CHECK(parse_symbol_poly("x^2*xi^2", 1) == SymbolPoly::monomial(1, {2}, {2}));
  CHECK(parse_symbol_poly("x*xi", 1) == SymbolPoly::monomial(1, {1}, {1}));
  CHECK(parse_symbol_poly("1/9*(x^3)", 1) ==
        SymbolPoly::monomial(GaussianRational(make_rational(1, 9)), {3}, {0}));
  CHECK(parse_symbol_poly("i", 1) == SymbolPoly::constant(GaussianRational::i()));
  CHECK(parse_symbol_poly("2/4", 1) == SymbolPoly::constant(GaussianRational(make_rational(1, 2))));
  CHECK(parse_symbol_poly("x - x", 1).is_zero());
  CHECK(parse_symbol_poly(" x + 2 * xi ", 1) ==
        SymbolPoly::x() + SymbolPoly::xi().scaled(2));
}

TEST_CASE("multi-dimensional variables") {
  const SymbolPoly am = parse_symbol_poly("x1*xi2 - x2*xi1", 2);
  SymbolPoly expect = SymbolPoly::x(1, 2) * SymbolPoly::xi(2, 2);
  expect -= SymbolPoly::x(2, 2) * SymbolPoly::xi(1, 2);
  CHECK(am == expect);

  // index defaults to 1
  CHECK(parse_symbol_poly("x", 2) == SymbolPoly::x(1, 2));
  CHECK(parse_symbol_poly("xi", 2) == SymbolPoly::xi(1, 2));
}

TEST_CASE("grammar structure") {
  // the exponent binds to the atom, including a negated atom
  CHECK(parse_symbol_poly("-x^2", 1) == SymbolPoly::x().pow(2));
  CHECK(parse_symbol_poly("-(x^2)", 1) == -SymbolPoly::x().pow(2));
  CHECK(parse_symbol_poly("1 - x^2", 1) ==
        SymbolPoly::constant(1) - SymbolPoly::x().pow(2));
  CHECK(parse_symbol_poly("-x", 1) == -SymbolPoly::x());
  CHECK(parse_symbol_poly("--x", 1) == SymbolPoly::x());
  CHECK(parse_symbol_poly("x^0", 1) == SymbolPoly::constant(1));

  const SymbolExpr ast = parse_symbol("x + 1", 1);
  CHECK(ast.kind == SymbolExpr::Kind::Sum);
  REQUIRE(ast.children.size() == 2);
  CHECK(ast.children[0].kind == SymbolExpr::Kind::VarX);
  CHECK(ast.children[1].kind == SymbolExpr::Kind::Rational);
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK(offset_of("", 1) == 0);
  CHECK(offset_of("   ", 1) == 0);
  CHECK(offset_of("x^", 1) == 2);
  CHECK(offset_of("x +", 1) == 3);
  CHECK(offset_of("x3", 2) == 1);    // index out of range, offset of the digits
  CHECK(offset_of("xi0", 1) == 2);   // zero index invalid
  CHECK(offset_of("x1*y", 2) == 3);  // unknown name
  CHECK(offset_of("1/0", 1) == 2);   // zero denominator
  CHECK(offset_of("2x", 1) == 1);    // juxtaposition is not multiplication
  CHECK(offset_of("(x", 1) == 2);
  CHECK(offset_of("x^-2", 1) == 2);  // negative exponent is not a uint
  CHECK(offset_of("x^2^3", 1) == 3);

  CHECK_THROWS_AS(parse_symbol("x2", 1), ParseError);
  CHECK_THROWS_AS(parse_symbol("xi3", 2), ParseError);

  // operators are output-only: D is not part of the symbol language
  CHECK_THROWS_AS(parse_symbol("D", 1), ParseError);
  CHECK_THROWS_AS(parse_symbol("x*D", 1), ParseError);
}

TEST_CASE("print/parse round trip on random polynomials") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> dims(1, 3);
  for (int iter = 0; iter < 250; ++iter) {
    const int dim = dims(rng);
    const SymbolPoly a = bjop_test::rand_symbol(rng, dim, 5, 4);
    const std::string printed = a.to_string();
    CAPTURE(printed);
    CHECK(parse_symbol_poly(printed, dim) == a);
  }
  // and a few shapes that exercise printer corner cases
  for (const char* s : {"0", "-1*x^2", "x", "-i*x", "(1/2 - 1/3*i)*x*xi"}) {
    const SymbolPoly a = parse_symbol_poly(s, 1);
    CHECK(parse_symbol_poly(a.to_string(), 1) == a);
  }
}
