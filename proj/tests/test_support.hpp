#pragma once

#include <random>

#include "bjop/op_poly.hpp"
#include "bjop/symbol_poly.hpp"

namespace bjop_test {

inline bjop::Rational rand_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 4);
  return bjop::make_rational(num(rng), den(rng));
}

inline bjop::GaussianRational rand_coeff(std::mt19937& rng, bool real_only = false) {
  bjop::Rational re = rand_rational(rng);
  bjop::Rational im = real_only ? bjop::Rational(0) : rand_rational(rng);
  return {re, im};
}

inline bjop::MultiIndex rand_exps(std::mt19937& rng, int dim, unsigned max_total) {
  std::uniform_int_distribution<unsigned> pick(0, max_total);
  bjop::MultiIndex m(static_cast<std::size_t>(dim), 0);
  unsigned budget = pick(rng);
  std::uniform_int_distribution<int> coord(0, dim - 1);
  for (unsigned k = 0; k < budget; ++k) ++m[static_cast<std::size_t>(coord(rng))];
  return m;
}

inline bjop::SymbolPoly rand_symbol(std::mt19937& rng, int dim, unsigned max_deg,
                                    int max_terms, bool real_only = false) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  bjop::SymbolPoly p(dim);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::uniform_int_distribution<unsigned> split(0, max_deg);
    const unsigned dx = split(rng);
    p.add_term({rand_exps(rng, dim, dx), rand_exps(rng, dim, max_deg - dx)},
               rand_coeff(rng, real_only));
  }
  return p;
}

inline bjop::OpPoly rand_op(std::mt19937& rng, int dim, unsigned max_deg, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  bjop::OpPoly p(dim);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::uniform_int_distribution<unsigned> split(0, max_deg);
    const unsigned dx = split(rng);
    p.add_term({rand_exps(rng, dim, dx), rand_exps(rng, dim, max_deg - dx)},
               rand_coeff(rng));
  }
  return p;
}

inline bjop::XPoly rand_xpoly(std::mt19937& rng, unsigned max_deg) {
  std::vector<bjop::GaussianRational> c(max_deg + 1);
  for (auto& v : c) v = rand_coeff(rng);
  return bjop::XPoly(std::move(c));
}

}  // namespace bjop_test
