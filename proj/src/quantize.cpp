#include "bjop/quantize.hpp"

#include <algorithm>

#include "bjop/errors.hpp"

namespace bjop {

std::string QuantizationRule::name() const {
  switch (kind) {
    case Kind::Weyl: return "weyl";
    case Kind::BornJordan: return "bj";
    case Kind::Tau: return "tau=" + to_string(tau);
  }
  return "?";
}

QuantizationRule parse_rule(const std::string& s) {
  if (s == "bj") return QuantizationRule::born_jordan();
  if (s == "weyl") return QuantizationRule::weyl();
  if (s.rfind("tau=", 0) == 0) {
    const std::string body = s.substr(4);
    const auto slash = body.find('/');
    try {
      if (slash == std::string::npos)
        return QuantizationRule::shubin(Rational(BigInt(body)));
      BigInt num(body.substr(0, slash));
      BigInt den(body.substr(slash + 1));
      return QuantizationRule::shubin(make_rational(num, den));
    } catch (const DivideByZeroError&) {
      throw Error("invalid tau value: " + body);
    } catch (const std::runtime_error&) {
      throw Error("invalid tau value: " + body);
    }
  }
  throw Error("unknown quantization rule: " + s + " (expected bj, weyl or tau=<p/q>)");
}

TauPoly::TauPoly(int dim) : dim_(dim) {
  if (dim < 1) throw Error("tau-polynomial dimension must be positive");
}

TauPoly TauPoly::constant_op(const OpPoly& op) {
  TauPoly p(op.dim());
  if (!op.is_zero()) p.c_.push_back(op);
  return p;
}

TauPoly TauPoly::monomial_op(const OpPoly& op, unsigned tau_degree) {
  TauPoly p(op.dim());
  if (!op.is_zero()) {
    p.c_.assign(tau_degree + 1, OpPoly(op.dim()));
    p.c_[tau_degree] = op;
  }
  return p;
}

void TauPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

unsigned TauPoly::degree() const {
  return c_.empty() ? 0 : static_cast<unsigned>(c_.size() - 1);
}

OpPoly TauPoly::coeff(unsigned m) const {
  return m < c_.size() ? c_[m] : OpPoly(dim_);
}

TauPoly& TauPoly::operator+=(const TauPoly& o) {
  if (dim_ != o.dim_) throw DimensionMismatchError(dim_, o.dim_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), OpPoly(dim_));
  for (std::size_t m = 0; m < o.c_.size(); ++m) c_[m] += o.c_[m];
  trim();
  return *this;
}

TauPoly operator*(const TauPoly& a, const TauPoly& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatchError(a.dim_, b.dim_);
  TauPoly out(a.dim_);
  if (a.c_.empty() || b.c_.empty()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, OpPoly(out.dim_));
  for (std::size_t m = 0; m < a.c_.size(); ++m)
    for (std::size_t l = 0; l < b.c_.size(); ++l)
      out.c_[m + l] += op_mul(a.c_[m], b.c_[l]);
  out.trim();
  return out;
}

TauPoly TauPoly::scaled(const GaussianRational& c) const {
  TauPoly out(dim_);
  out.c_.reserve(c_.size());
  for (auto& op : c_) out.c_.push_back(op.scaled(c));
  out.trim();
  return out;
}

OpPoly TauPoly::evaluate(const Rational& tau) const {
  OpPoly out(dim_);
  Rational p(1);
  for (auto& op : c_) {
    out += op.scaled(GaussianRational(p));
    p *= tau;
  }
  return out;
}

OpPoly TauPoly::integrate01() const {
  OpPoly out(dim_);
  for (std::size_t m = 0; m < c_.size(); ++m)
    out += c_[m].scaled(GaussianRational(make_rational(1, static_cast<long long>(m + 1))));
  return out;
}

TauPoly TauPoly::mirrored() const {
  // tau^j -> (1-tau)^j = sum_m C(j,m) (-1)^m tau^m
  TauPoly out(dim_);
  out.c_.assign(c_.size(), OpPoly(dim_));
  for (std::size_t j = 0; j < c_.size(); ++j)
    for (std::size_t m = 0; m <= j; ++m) {
      Rational w(binomial(static_cast<unsigned>(j), static_cast<unsigned>(m)));
      if (m % 2 == 1) w = -w;
      out.c_[m] += c_[j].scaled(GaussianRational(w));
    }
  out.trim();
  return out;
}

namespace {

// Normal-ordered word x_j^k D_j^s x_j^m in the given ambient dimension.
OpPoly ordered_word(int dim, int j, unsigned k, unsigned s, unsigned m) {
  MultiIndex z(static_cast<std::size_t>(dim), 0);
  OpPoly left = OpPoly::monomial(1, unit_index(dim, j, k), z);
  OpPoly mid = OpPoly::monomial(1, z, unit_index(dim, j, s));
  OpPoly right = OpPoly::monomial(1, unit_index(dim, j, m), z);
  return op_mul(op_mul(left, mid), right);
}

// Scalar tau-polynomial C(r,k) (1-tau)^k tau^(r-k), as coefficients of tau^m.
std::vector<Rational> tau_weight(unsigned r, unsigned k) {
  std::vector<Rational> w(r + 1, Rational(0));
  const BigInt crk = binomial(r, k);
  for (unsigned m = 0; m <= k; ++m) {
    Rational v(crk * binomial(k, m));
    if (m % 2 == 1) v = -v;
    w[(r - k) + m] += v;
  }
  return w;
}

}  // namespace

TauPoly quantize_tau_formal(const SymbolPoly& a) {
  const int dim = a.dim();
  TauPoly out(dim);
  for (auto& [key, c] : a.terms()) {
    TauPoly term = TauPoly::constant_op(OpPoly::constant(c, dim));
    for (int j = 0; j < dim; ++j) {
      const unsigned r = key.x[static_cast<std::size_t>(j)];
      const unsigned s = key.k[static_cast<std::size_t>(j)];
      TauPoly factor(dim);
      for (unsigned k = 0; k <= r; ++k) {
        const OpPoly word = ordered_word(dim, j, k, s, r - k);
        const auto w = tau_weight(r, k);
        for (unsigned m = 0; m < w.size(); ++m) {
          if (w[m] == 0) continue;
          factor += TauPoly::monomial_op(word.scaled(GaussianRational(w[m])), m);
        }
      }
      term = term * factor;
    }
    out += term;
  }
  return out;
}

OpPoly quantize_tau(const SymbolPoly& a, const Rational& tau) {
  return quantize_tau_formal(a).evaluate(tau);
}

OpPoly quantize_weyl(const SymbolPoly& a) { return quantize_tau(a, Rational(1, 2)); }

OpPoly quantize_bj(const SymbolPoly& a) { return quantize_tau_formal(a).integrate01(); }

OpPoly quantize(const SymbolPoly& a, const QuantizationRule& rule) {
  switch (rule.kind) {
    case QuantizationRule::Kind::Weyl: return quantize_weyl(a);
    case QuantizationRule::Kind::BornJordan: return quantize_bj(a);
    case QuantizationRule::Kind::Tau: return quantize_tau(a, rule.tau);
  }
  throw Error("bad quantization rule");
}

OpPoly bj_via_commutator(unsigned r, unsigned s) {
  OpPoly comm = op_commutator(OpPoly::x_power(r + 1), OpPoly::d_power(s + 1));
  // 1/(i (r+1)(s+1)) = -i/((r+1)(s+1))
  const Rational scale = make_rational(1, static_cast<long long>(r + 1) * (s + 1));
  return comm.scaled(GaussianRational(Rational(0), -scale));
}

}  // namespace bjop
