#include "bjop/parse.hpp"

#include <cctype>

#include "bjop/errors.hpp"

namespace bjop {

namespace {

class Parser {
 public:
  Parser(std::string_view src, int dim) : src_(src), dim_(dim) {}

  SymbolExpr run() {
    skip_ws();
    if (eof()) throw ParseError("empty symbol expression", 0);
    SymbolExpr e = expr();
    skip_ws();
    if (!eof()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  std::string_view src_;
  int dim_;
  std::size_t pos_ = 0;

  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (!eof() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SymbolExpr expr() {
    SymbolExpr sum;
    sum.kind = SymbolExpr::Kind::Sum;
    sum.children.push_back(term());
    while (true) {
      if (accept('+')) {
        sum.children.push_back(term());
      } else if (accept('-')) {
        SymbolExpr neg;
        neg.kind = SymbolExpr::Kind::Negation;
        neg.children.push_back(term());
        sum.children.push_back(std::move(neg));
      } else {
        break;
      }
    }
    if (sum.children.size() == 1) return std::move(sum.children.front());
    return sum;
  }

  SymbolExpr term() {
    SymbolExpr prod;
    prod.kind = SymbolExpr::Kind::Product;
    prod.children.push_back(factor());
    while (accept('*')) prod.children.push_back(factor());
    if (prod.children.size() == 1) return std::move(prod.children.front());
    return prod;
  }

  SymbolExpr factor() {
    SymbolExpr base = atom();
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      SymbolExpr pow;
      pow.kind = SymbolExpr::Kind::Power;
      pow.exponent = parse_uint("exponent");
      pow.children.push_back(std::move(base));
      return pow;
    }
    return base;
  }

  SymbolExpr atom() {
    skip_ws();
    if (eof()) throw ParseError("unexpected end of input", pos_);
    const char c = peek();
    if (c == '-') {
      ++pos_;
      SymbolExpr neg;
      neg.kind = SymbolExpr::Kind::Negation;
      neg.children.push_back(atom());
      return neg;
    }
    if (c == '(') {
      ++pos_;
      SymbolExpr inner = expr();
      skip_ws();
      if (eof() || peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  SymbolExpr rational() {
    const BigInt num(digits("number"));
    SymbolExpr e;
    e.kind = SymbolExpr::Kind::Rational;
    const std::size_t save = pos_;
    skip_ws();
    if (!eof() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t dstart = pos_;
      const BigInt den(digits("denominator"));
      if (den == 0) throw ParseError("zero denominator", dstart);
      e.value = make_rational(num, den);
    } else {
      pos_ = save;
      e.value = Rational(num);
    }
    return e;
  }

  SymbolExpr variable() {
    const std::size_t start = pos_;
    std::string name;
    while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) {
      name += peek();
      ++pos_;
    }
    SymbolExpr e;
    if (name == "i") {
      e.kind = SymbolExpr::Kind::ImagUnit;
      return e;
    }
    if (name != "x" && name != "xi")
      throw ParseError("unknown name '" + name + "'", start);
    e.kind = name == "x" ? SymbolExpr::Kind::VarX : SymbolExpr::Kind::VarXi;
    e.index = 1;
    if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t istart = pos_;
      const std::string ds = digits("index");
      if (ds.size() > 4) throw ParseError("variable index too large", istart);
      e.index = std::stoi(ds);
      if (e.index < 1 || e.index > dim_)
        throw ParseError("variable index " + ds + " out of range for dimension " +
                             std::to_string(dim_),
                         istart);
    }
    return e;
  }

  unsigned parse_uint(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    const std::string ds = digits(what);
    if (ds.size() > 4) throw ParseError(std::string(what) + " too large", start);
    return static_cast<unsigned>(std::stoul(ds));
  }

  std::string digits(const char* what) {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(std::string("expected ") + what, pos_);
    std::string ds;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ds += peek();
      ++pos_;
    }
    return ds;
  }
};

}  // namespace

SymbolExpr parse_symbol(std::string_view src, int dim) {
  if (dim < 1) throw Error("dimension must be positive");
  return Parser(src, dim).run();
}

SymbolPoly lower(const SymbolExpr& expr, int dim) {
  switch (expr.kind) {
    case SymbolExpr::Kind::Rational:
      return SymbolPoly::constant(GaussianRational(expr.value), dim);
    case SymbolExpr::Kind::ImagUnit:
      return SymbolPoly::constant(GaussianRational::i(), dim);
    case SymbolExpr::Kind::VarX:
      return SymbolPoly::x(expr.index, dim);
    case SymbolExpr::Kind::VarXi:
      return SymbolPoly::xi(expr.index, dim);
    case SymbolExpr::Kind::Sum: {
      SymbolPoly acc(dim);
      for (const auto& c : expr.children) acc += lower(c, dim);
      return acc;
    }
    case SymbolExpr::Kind::Product: {
      SymbolPoly acc = SymbolPoly::constant(1, dim);
      for (const auto& c : expr.children) acc = acc * lower(c, dim);
      return acc;
    }
    case SymbolExpr::Kind::Power:
      return lower(expr.children.front(), dim).pow(expr.exponent);
    case SymbolExpr::Kind::Negation:
      return -lower(expr.children.front(), dim);
  }
  throw Error("malformed symbol expression tree");
}

}  // namespace bjop
