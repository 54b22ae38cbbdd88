#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "bjop/errors.hpp"
#include "bjop/quantize.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bjop;
using bjop_test::rand_symbol;

namespace {

const GaussianRational I = GaussianRational::i();

OpPoly xd_minus_i_half() {
  OpPoly p = OpPoly::monomial(1, {1}, {1});
  p += OpPoly::constant(GaussianRational(Rational(0), make_rational(-1, 2)));
  return p;
}

OpPoly quad(const Rational& c) {
  OpPoly p = OpPoly::monomial(1, {2}, {2});
  p += OpPoly::monomial(GaussianRational(Rational(0), Rational(-2)), {1}, {1});
  p += OpPoly::constant(GaussianRational(c));
  return p;
}

}  // namespace

TEST_CASE("tau quantization at the endpoints and midpoint") {
  const SymbolPoly xxi = SymbolPoly::monomial(1, {1}, {1});

  // kernel convention: tau = 0 puts all position factors on the left
  CHECK(quantize_tau(xxi, Rational(0)) == OpPoly::monomial(1, {1}, {1}));
  // tau = 1 is the opposite ordering D x = x D - i
  CHECK(quantize_tau(xxi, Rational(1)) ==
        op_mul(OpPoly::d_power(1), OpPoly::x_power(1)));

  // midpoint: the average of x D and D x, computed independently via op_mul
  OpPoly avg = OpPoly::monomial(1, {1}, {1}) + op_mul(OpPoly::d_power(1), OpPoly::x_power(1));
  avg = avg.scaled(GaussianRational(make_rational(1, 2)));
  CHECK(quantize_tau(xxi, make_rational(1, 2)) == avg);
  CHECK(avg == xd_minus_i_half());
}

TEST_CASE("x-only symbols quantize to multiplication under every rule") {
  const SymbolPoly x3 = SymbolPoly::x().pow(3);
  const OpPoly mult_x3 = OpPoly::x_power(3);
  for (const Rational& tau : {Rational(0), make_rational(1, 3), make_rational(1, 2),
                              make_rational(7, 5), Rational(1)}) {
    CAPTURE(to_string(tau));
    CHECK(quantize_tau(x3, tau) == mult_x3);
  }
  CHECK(quantize_bj(x3) == mult_x3);
  CHECK(quantize_weyl(x3) == mult_x3);

  const SymbolPoly xi2 = SymbolPoly::xi().pow(2);
  CHECK(quantize_weyl(xi2) == OpPoly::d_power(2));
  CHECK(quantize_bj(xi2) == OpPoly::d_power(2));
}

TEST_CASE("weyl quantization examples") {
  CHECK(quantize_weyl(SymbolPoly::monomial(1, {1}, {1})) == xd_minus_i_half());

  // expand sum_k C(2,k) (1/2)^2 x^k D^2 x^{2-k} independently
  OpPoly expansion(1);
  for (unsigned k = 0; k <= 2; ++k) {
    OpPoly word = op_mul(op_mul(OpPoly::x_power(k), OpPoly::d_power(2)),
                         OpPoly::x_power(2 - k));
    expansion += word.scaled(GaussianRational(make_rational(1, 4) * Rational(binomial(2, k))));
  }
  const OpPoly w = quantize_weyl(SymbolPoly::monomial(1, {2}, {2}));
  CHECK(w == expansion);
  CHECK(w == quad(make_rational(-1, 2)));

  // action cross-check against the oracle on u = x^m
  for (unsigned m = 0; m <= 4; ++m)
    CHECK(op_apply_poly(w, XPoly::x_power(m)) ==
          op_apply_poly(quad(make_rational(-1, 2)), XPoly::x_power(m)));
}

TEST_CASE("born-jordan quantization examples") {
  CHECK(quantize_bj(SymbolPoly::monomial(1, {1}, {1})) == xd_minus_i_half());
  CHECK(quantize_bj(SymbolPoly::monomial(1, {2}, {2})) == quad(make_rational(-2, 3)));
  CHECK(quantize_bj(SymbolPoly::x().pow(3)) == OpPoly::x_power(3));
}

TEST_CASE("commutator route") {
  CHECK(bj_via_commutator(0, 0) == OpPoly::identity());

  // (1/(4i)) (4 i x D + 2)
  OpPoly raw = OpPoly::monomial(GaussianRational(Rational(0), Rational(4)), {1}, {1});
  raw += OpPoly::constant(2);
  CHECK(raw.scaled(GaussianRational(1) / (GaussianRational(4) * I)) == xd_minus_i_half());
  CHECK(bj_via_commutator(1, 1) == xd_minus_i_half());

  CHECK(bj_via_commutator(2, 2) == quad(make_rational(-2, 3)));
}

TEST_CASE("fundamental identity sweep") {
  for (unsigned r = 0; r <= 8; ++r)
    for (unsigned s = 0; s <= 8; ++s) {
      CAPTURE(r);
      CAPTURE(s);
      CHECK(bj_via_commutator(r, s) == quantize_bj(SymbolPoly::monomial(1, {r}, {s})));
    }
}

TEST_CASE("tau-average is invariant under the tau <-> 1-tau mirror") {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 60; ++iter) {
    const SymbolPoly a = rand_symbol(rng, 1, 4, 3);
    const TauPoly tp = quantize_tau_formal(a);
    CHECK(tp.mirrored().integrate01() == tp.integrate01());
    CHECK(tp.integrate01() == quantize_bj(a));
    // the mirror itself is the opposite-ordering expansion
    CHECK(tp.mirrored().evaluate(Rational(0)) == quantize_tau(a, Rational(1)));
  }
}

TEST_CASE("tau degree never exceeds the x-degree of the symbol") {
  std::mt19937 rng(77);
  for (int iter = 0; iter < 60; ++iter) {
    const SymbolPoly a = rand_symbol(rng, 2, 5, 4);
    const TauPoly tp = quantize_tau_formal(a);
    if (!a.is_zero()) CHECK(tp.degree() <= a.x_degree());
  }
}

TEST_CASE("weyl equals born-jordan exactly on quadratics, n = 1 and 2") {
  for (int dim = 1; dim <= 2; ++dim) {
    const auto n = static_cast<std::size_t>(dim);
    // enumerate all monomials of total degree <= 2
    std::vector<std::pair<MultiIndex, MultiIndex>> monos;
    MultiIndex zero(n, 0);
    monos.push_back({zero, zero});
    for (std::size_t i = 0; i < 2 * n; ++i) {
      MultiIndex a = zero, b = zero;
      (i < n ? a[i] : b[i - n]) = 1;
      monos.push_back({a, b});
      for (std::size_t j = i; j < 2 * n; ++j) {
        MultiIndex c = a, d = b;
        (j < n ? c[j] : d[j - n]) += 1;
        monos.push_back({c, d});
      }
    }
    for (auto& [a, b] : monos) {
      const SymbolPoly mono = SymbolPoly::monomial(1, a, b);
      CAPTURE(mono.to_string());
      CAPTURE(dim);
      CHECK(quantize_weyl(mono) == quantize_bj(mono));
    }
  }
}

TEST_CASE("first divergence: (bj - weyl)(x^2 xi^2) = -1/6") {
  const SymbolPoly m = SymbolPoly::monomial(1, {2}, {2});
  CHECK(quantize_bj(m) - quantize_weyl(m) ==
        OpPoly::constant(GaussianRational(make_rational(-1, 6))));
}

TEST_CASE("real symbols give formally self-adjoint born-jordan operators") {
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 80; ++iter) {
    const SymbolPoly a = rand_symbol(rng, 1, 4, 3, /*real_only=*/true);
    const OpPoly op = quantize_bj(a);
    CHECK(op_adjoint(op) == op);
    // weyl shares the property; a generic tau does not, but satisfies
    // Op_tau(a)* = Op_{1-tau}(a)
    CHECK(op_adjoint(quantize_weyl(a)) == quantize_weyl(a));
    const Rational tau = make_rational(1, 3);
    CHECK(op_adjoint(quantize_tau(a, tau)) == quantize_tau(a, Rational(1) - tau));
  }
}

TEST_CASE("multi-dimensional quantization factorizes over coordinates") {
  // a = x1 xi1 * x2 xi2 in dim 2: the shared-tau expansion couples the
  // coordinates only through the common integration variable
  const SymbolPoly a = SymbolPoly::monomial(1, {1, 1}, {1, 1});
  const OpPoly bj = quantize_bj(a);

  // integrate the product of per-coordinate linear tau-expansions by hand:
  // coordinate j contributes (1-tau) x_j D_j + tau D_j x_j; the tau^2,
  // tau(1-tau) and (1-tau)^2 moments on [0,1] are 1/3, 1/6, 1/3.
  const OpPoly xd1 = OpPoly::monomial(1, {1, 0}, {1, 0});
  const OpPoly dx1 = op_mul(OpPoly::monomial(1, {0, 0}, {1, 0}), OpPoly::monomial(1, {1, 0}, {0, 0}));
  const OpPoly xd2 = OpPoly::monomial(1, {0, 1}, {0, 1});
  const OpPoly dx2 = op_mul(OpPoly::monomial(1, {0, 0}, {0, 1}), OpPoly::monomial(1, {0, 1}, {0, 0}));
  const GaussianRational third(make_rational(1, 3));
  const GaussianRational sixth(make_rational(1, 6));
  OpPoly expect = op_mul(xd1, xd2).scaled(third);
  expect += op_mul(dx1, dx2).scaled(third);
  expect += op_mul(xd1, dx2).scaled(sixth);
  expect += op_mul(dx1, xd2).scaled(sixth);
  CHECK(bj == expect);

  // and it is not the per-coordinate average, which would use 1/4 weights
  OpPoly per_coord = op_mul(xd1 + dx1, xd2 + dx2).scaled(GaussianRational(make_rational(1, 4)));
  CHECK(bj != per_coord);
}

TEST_CASE("rule objects") {
  const SymbolPoly a = SymbolPoly::monomial(1, {2}, {1});
  CHECK(quantize(a, QuantizationRule::weyl()) == quantize_tau(a, make_rational(1, 2)));
  CHECK(quantize(a, QuantizationRule::born_jordan()) == quantize_bj(a));
  CHECK(quantize(a, QuantizationRule::shubin(make_rational(1, 4))) ==
        quantize_tau(a, make_rational(1, 4)));

  CHECK(parse_rule("bj").kind == QuantizationRule::Kind::BornJordan);
  CHECK(parse_rule("weyl").kind == QuantizationRule::Kind::Weyl);
  CHECK(parse_rule("tau=2/3").tau == make_rational(2, 3));
  CHECK(parse_rule("tau=0").tau == Rational(0));
  CHECK_THROWS_AS(parse_rule("husimi"), Error);
  CHECK_THROWS_AS(parse_rule("tau=1/0"), Error);
  CHECK_THROWS_AS(parse_rule("tau=abc"), Error);
}

TEST_CASE("linearity of the quantization maps") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 60; ++iter) {
    const SymbolPoly a = rand_symbol(rng, 1, 4, 3);
    const SymbolPoly b = rand_symbol(rng, 1, 4, 3);
    const GaussianRational c = bjop_test::rand_coeff(rng);
    CHECK(quantize_bj(a + b.scaled(c)) == quantize_bj(a) + quantize_bj(b).scaled(c));
    CHECK(quantize_weyl(a + b) == quantize_weyl(a) + quantize_weyl(b));
  }
}
