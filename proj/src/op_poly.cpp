#include "bjop/op_poly.hpp"

#include <algorithm>

#include "bjop/detail/term_format.hpp"
#include "bjop/errors.hpp"

namespace bjop {

OpPoly::OpPoly(int dim) : dim_(dim) {
  if (dim < 1) throw Error("operator dimension must be positive");
}

OpPoly OpPoly::constant(const GaussianRational& c, int dim) {
  OpPoly p(dim);
  MultiIndex z(static_cast<std::size_t>(dim), 0);
  p.add_term({z, z}, c);
  return p;
}

OpPoly OpPoly::monomial(const GaussianRational& c, MultiIndex xexp, MultiIndex dexp) {
  if (xexp.size() != dexp.size() || xexp.empty())
    throw DimensionMismatchError(static_cast<int>(xexp.size()), static_cast<int>(dexp.size()));
  OpPoly p(static_cast<int>(xexp.size()));
  p.add_term({std::move(xexp), std::move(dexp)}, c);
  return p;
}

OpPoly OpPoly::x_power(unsigned r) { return monomial(1, {r}, {0}); }
OpPoly OpPoly::d_power(unsigned s) { return monomial(1, {0}, {s}); }

bool OpPoly::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return bjop::total_degree(t.first.x) == 0 && bjop::total_degree(t.first.k) == 0;
  });
}

GaussianRational OpPoly::coefficient(const ExpKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

GaussianRational OpPoly::constant_term() const {
  MultiIndex z(static_cast<std::size_t>(dim_), 0);
  return coefficient({z, z});
}

unsigned OpPoly::total_degree() const {
  if (terms_.empty()) return 0;
  auto& key = terms_.rbegin()->first;
  return bjop::total_degree(key.x) + bjop::total_degree(key.k);
}

void OpPoly::add_term(const ExpKey& key, const GaussianRational& c) {
  if (c.is_zero()) return;
  if (key.x.size() != static_cast<std::size_t>(dim_) || key.k.size() != static_cast<std::size_t>(dim_))
    throw DimensionMismatchError(static_cast<int>(key.x.size()), dim_);
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OpPoly OpPoly::promoted(int newdim) const {
  OpPoly p(newdim);
  MultiIndex z(static_cast<std::size_t>(newdim), 0);
  for (auto& [key, c] : terms_) p.add_term({z, z}, c);
  return p;
}

void OpPoly::align(OpPoly& a, OpPoly& b) {
  if (a.dim_ == b.dim_) return;
  if (a.is_constant())
    a = a.promoted(b.dim_);
  else if (b.is_constant())
    b = b.promoted(a.dim_);
  else
    throw DimensionMismatchError(a.dim_, b.dim_);
}

OpPoly& OpPoly::operator+=(const OpPoly& o) {
  OpPoly rhs = o;
  align(*this, rhs);
  for (auto& [key, c] : rhs.terms_) add_term(key, c);
  return *this;
}

OpPoly& OpPoly::operator-=(const OpPoly& o) {
  OpPoly rhs = o;
  align(*this, rhs);
  for (auto& [key, c] : rhs.terms_) add_term(key, -c);
  return *this;
}

OpPoly operator-(const OpPoly& a) {
  OpPoly out(a.dim_);
  for (auto& [key, c] : a.terms_) out.add_term(key, -c);
  return out;
}

OpPoly OpPoly::scaled(const GaussianRational& c) const {
  OpPoly out(dim_);
  for (auto& [key, v] : terms_) out.add_term(key, v * c);
  return out;
}

bool OpPoly::operator==(const OpPoly& o) const {
  if (dim_ == o.dim_) return terms_ == o.terms_;
  if (is_constant() && o.is_constant()) return constant_term() == o.constant_term();
  return false;
}

std::string OpPoly::to_string() const {
  return detail::format_terms(terms_, dim_, "x", "D");
}

OpPoly op_mul(const OpPoly& A, const OpPoly& B) {
  OpPoly lhs = A, rhs = B;
  OpPoly::align(lhs, rhs);
  const int dim = lhs.dim();
  const auto n = static_cast<std::size_t>(dim);
  OpPoly out(dim);

  for (auto& [ka, ca] : lhs.terms()) {
    for (auto& [kb, cb] : rhs.terms()) {
      // (x^p D^q)(x^r D^s): push each D_j^{q_j} through x_j^{r_j}.
      // Odometer over the per-coordinate contraction orders k_j.
      MultiIndex kmax(n);
      for (std::size_t j = 0; j < n; ++j) kmax[j] = std::min(ka.k[j], kb.x[j]);
      MultiIndex k(n, 0);
      while (true) {
        GaussianRational coeff = ca * cb;
        ExpKey key{ka.x, ka.k};
        for (std::size_t j = 0; j < n; ++j) {
          if (k[j] > 0) {
            coeff *= GaussianRational(Rational(binomial(ka.k[j], k[j]) *
                                               falling_factorial(kb.x[j], k[j])));
            coeff *= minus_i_pow(k[j]);
          }
          key.x[j] += kb.x[j] - k[j];
          key.k[j] += kb.k[j];
          key.k[j] -= k[j];
        }
        out.add_term(key, coeff);

        std::size_t j = 0;
        while (j < n && k[j] == kmax[j]) k[j++] = 0;
        if (j == n) break;
        ++k[j];
      }
    }
  }
  return out;
}

OpPoly op_commutator(const OpPoly& A, const OpPoly& B) {
  return op_mul(A, B) - op_mul(B, A);
}

OpPoly op_adjoint(const OpPoly& A) {
  OpPoly out(A.dim());
  for (auto& [key, c] : A.terms()) {
    OpPoly dword = OpPoly::monomial(1, MultiIndex(key.k.size(), 0), key.k);
    OpPoly xword = OpPoly::monomial(1, key.x, MultiIndex(key.x.size(), 0));
    out += op_mul(dword, xword).scaled(c.conj());
  }
  return out;
}

XPoly::XPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void XPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly XPoly::x_power(unsigned m) {
  std::vector<GaussianRational> c(m + 1);
  c[m] = 1;
  return XPoly(std::move(c));
}

XPoly XPoly::constant(const GaussianRational& c) { return XPoly({c}); }

GaussianRational XPoly::coefficient(unsigned k) const {
  return k < c_.size() ? c_[k] : GaussianRational{};
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

XPoly XPoly::scaled(const GaussianRational& s) const {
  std::vector<GaussianRational> c = c_;
  for (auto& v : c) v *= s;
  return XPoly(std::move(c));
}

std::string XPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += bjop::to_string(c_[k]);
    if (k >= 1) s += "*x";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

XPoly op_apply_poly(const OpPoly& A, const XPoly& u) {
  if (A.dim() != 1) throw DimensionMismatchError(A.dim(), 1);
  XPoly out;
  for (auto& [key, c] : A.terms()) {
    const unsigned a = key.x[0];
    const unsigned b = key.k[0];
    std::vector<GaussianRational> v(u.coeffs().begin(), u.coeffs().end());
    // D^b: differentiate the coefficient list b times, a factor -i each time
    for (unsigned step = 0; step < b && !v.empty(); ++step) {
      std::vector<GaussianRational> d(v.size() > 1 ? v.size() - 1 : 0);
      for (std::size_t k = 1; k < v.size(); ++k)
        d[k - 1] = v[k] * GaussianRational(Rational(k)) * (-GaussianRational::i());
      v = std::move(d);
    }
    // x^a: shift coefficients up
    if (a > 0 && !v.empty()) v.insert(v.begin(), a, GaussianRational{});
    out += XPoly(std::move(v)).scaled(c);
  }
  return out;
}

}  // namespace bjop
