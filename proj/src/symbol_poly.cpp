#include "bjop/symbol_poly.hpp"

#include <algorithm>

#include "bjop/detail/term_format.hpp"
#include "bjop/errors.hpp"

namespace bjop {

SymbolPoly::SymbolPoly(int dim) : dim_(dim) {
  if (dim < 1) throw Error("polynomial dimension must be positive");
}

SymbolPoly SymbolPoly::constant(const GaussianRational& c, int dim) {
  SymbolPoly p(dim);
  MultiIndex z(static_cast<std::size_t>(dim), 0);
  p.add_term({z, z}, c);
  return p;
}

SymbolPoly SymbolPoly::monomial(const GaussianRational& c, MultiIndex xexp, MultiIndex kexp) {
  if (xexp.size() != kexp.size() || xexp.empty())
    throw DimensionMismatchError(static_cast<int>(xexp.size()), static_cast<int>(kexp.size()));
  SymbolPoly p(static_cast<int>(xexp.size()));
  p.add_term({std::move(xexp), std::move(kexp)}, c);
  return p;
}

SymbolPoly SymbolPoly::x(int j, int dim) {
  if (j < 1 || j > dim) throw IndexOutOfRangeError(j, dim);
  SymbolPoly p(dim);
  p.add_term({unit_index(dim, j - 1), MultiIndex(static_cast<std::size_t>(dim), 0)}, 1);
  return p;
}

SymbolPoly SymbolPoly::xi(int j, int dim) {
  if (j < 1 || j > dim) throw IndexOutOfRangeError(j, dim);
  SymbolPoly p(dim);
  p.add_term({MultiIndex(static_cast<std::size_t>(dim), 0), unit_index(dim, j - 1)}, 1);
  return p;
}

bool SymbolPoly::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return bjop::total_degree(t.first.x) == 0 && bjop::total_degree(t.first.k) == 0;
  });
}

GaussianRational SymbolPoly::coefficient(const ExpKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

GaussianRational SymbolPoly::constant_term() const {
  MultiIndex z(static_cast<std::size_t>(dim_), 0);
  return coefficient({z, z});
}

unsigned SymbolPoly::total_degree() const {
  if (terms_.empty()) return 0;
  auto& key = terms_.rbegin()->first;  // graded order: last term has max degree
  return bjop::total_degree(key.x) + bjop::total_degree(key.k);
}

unsigned SymbolPoly::x_degree() const {
  unsigned d = 0;
  for (auto& [key, c] : terms_) d = std::max(d, bjop::total_degree(key.x));
  return d;
}

bool SymbolPoly::depends_only_on_x() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return bjop::total_degree(t.first.k) == 0; });
}

bool SymbolPoly::depends_only_on_xi() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return bjop::total_degree(t.first.x) == 0; });
}

void SymbolPoly::add_term(const ExpKey& key, const GaussianRational& c) {
  if (c.is_zero()) return;
  if (key.x.size() != static_cast<std::size_t>(dim_) || key.k.size() != static_cast<std::size_t>(dim_))
    throw DimensionMismatchError(static_cast<int>(key.x.size()), dim_);
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymbolPoly SymbolPoly::promoted(int newdim) const {
  SymbolPoly p(newdim);
  MultiIndex z(static_cast<std::size_t>(newdim), 0);
  for (auto& [key, c] : terms_) p.add_term({z, z}, c);
  return p;
}

void SymbolPoly::align(SymbolPoly& a, SymbolPoly& b) {
  if (a.dim_ == b.dim_) return;
  if (a.is_constant())
    a = a.promoted(b.dim_);
  else if (b.is_constant())
    b = b.promoted(a.dim_);
  else
    throw DimensionMismatchError(a.dim_, b.dim_);
}

SymbolPoly& SymbolPoly::operator+=(const SymbolPoly& o) {
  SymbolPoly rhs = o;
  align(*this, rhs);
  for (auto& [key, c] : rhs.terms_) add_term(key, c);
  return *this;
}

SymbolPoly& SymbolPoly::operator-=(const SymbolPoly& o) {
  SymbolPoly rhs = o;
  align(*this, rhs);
  for (auto& [key, c] : rhs.terms_) add_term(key, -c);
  return *this;
}

SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) {
  SymbolPoly lhs = a, rhs = b;
  SymbolPoly::align(lhs, rhs);
  SymbolPoly out(lhs.dim_);
  const auto n = static_cast<std::size_t>(lhs.dim_);
  for (auto& [ka, ca] : lhs.terms_) {
    for (auto& [kb, cb] : rhs.terms_) {
      ExpKey key{ka.x, ka.k};
      for (std::size_t j = 0; j < n; ++j) {
        key.x[j] += kb.x[j];
        key.k[j] += kb.k[j];
      }
      out.add_term(key, ca * cb);
    }
  }
  return out;
}

SymbolPoly operator-(const SymbolPoly& a) {
  SymbolPoly out(a.dim_);
  for (auto& [key, c] : a.terms_) out.add_term(key, -c);
  return out;
}

SymbolPoly SymbolPoly::scaled(const GaussianRational& c) const {
  SymbolPoly out(dim_);
  for (auto& [key, v] : terms_) out.add_term(key, v * c);
  return out;
}

SymbolPoly SymbolPoly::pow(unsigned e) const {
  SymbolPoly out = SymbolPoly::constant(1, dim_);
  for (unsigned k = 0; k < e; ++k) out = out * *this;
  return out;
}

SymbolPoly SymbolPoly::partial_x(int j) const {
  if (j < 1 || j > dim_) throw IndexOutOfRangeError(j, dim_);
  const auto jj = static_cast<std::size_t>(j - 1);
  SymbolPoly out(dim_);
  for (auto& [key, c] : terms_) {
    if (key.x[jj] == 0) continue;
    ExpKey d = key;
    --d.x[jj];
    out.add_term(d, c * GaussianRational(Rational(key.x[jj])));
  }
  return out;
}

SymbolPoly SymbolPoly::partial_xi(int j) const {
  if (j < 1 || j > dim_) throw IndexOutOfRangeError(j, dim_);
  const auto jj = static_cast<std::size_t>(j - 1);
  SymbolPoly out(dim_);
  for (auto& [key, c] : terms_) {
    if (key.k[jj] == 0) continue;
    ExpKey d = key;
    --d.k[jj];
    out.add_term(d, c * GaussianRational(Rational(key.k[jj])));
  }
  return out;
}

bool SymbolPoly::operator==(const SymbolPoly& o) const {
  if (dim_ == o.dim_) return terms_ == o.terms_;
  // constants compare equal across dimensions
  if (is_constant() && o.is_constant()) return constant_term() == o.constant_term();
  return false;
}

std::string SymbolPoly::to_string() const {
  return detail::format_terms(terms_, dim_, "x", "xi");
}

SymbolPoly poisson_bracket(const SymbolPoly& a, const SymbolPoly& b) {
  SymbolPoly lhs = a, rhs = b;
  SymbolPoly::align(lhs, rhs);
  SymbolPoly out(lhs.dim());
  for (int j = 1; j <= lhs.dim(); ++j) {
    out += lhs.partial_x(j) * rhs.partial_xi(j);
    out -= rhs.partial_x(j) * lhs.partial_xi(j);
  }
  return out;
}

}  // namespace bjop
