#include "bjop/detail/term_format.hpp"

namespace bjop::detail {

namespace {

std::string monomial_string(const ExpKey& key, int dim, const char* xbase, const char* kbase) {
  std::string s;
  auto emit = [&](const char* base, const MultiIndex& exps) {
    for (std::size_t j = 0; j < exps.size(); ++j) {
      if (exps[j] == 0) continue;
      if (!s.empty()) s += "*";
      s += base;
      if (dim > 1) s += std::to_string(j + 1);
      if (exps[j] >= 2) s += "^" + std::to_string(exps[j]);
    }
  };
  emit(xbase, key.x);
  emit(kbase, key.k);
  return s;
}

}  // namespace

std::string format_terms(const std::map<ExpKey, GaussianRational, GradedLex>& terms,
                         int dim, const char* xbase, const char* kbase) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  // descending graded-lex
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const GaussianRational& c = it->second;
    std::string mono = monomial_string(it->first, dim, xbase, kbase);

    // Extract a printable sign for pure real / pure imaginary coefficients;
    // mixed coefficients are parenthesized and never carry an outer sign.
    bool negative = false;
    GaussianRational mag = c;
    if (c.is_real()) {
      negative = c.re < 0;
      if (negative) mag = -c;
    } else if (c.is_imaginary()) {
      negative = c.im < 0;
      if (negative) mag = -c;
    }

    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";

    std::string num;
    if (mag.is_real()) {
      if (mag.re == 1 && !mono.empty()) {
        // A bare leading "-x^2" would re-parse as (-x)^2, so keep the 1.
        num = (first && negative) ? "1" : "";
      } else {
        num = to_string(mag.re);
      }
    } else if (mag.is_imaginary()) {
      num = (mag.im == 1) ? "i" : to_string(mag.im) + "*i";
    } else {
      num = to_string(mag);  // parenthesized mixed form
    }

    if (num.empty())
      out += mono.empty() ? "1" : mono;
    else if (mono.empty())
      out += num;
    else
      out += num + "*" + mono;
    first = false;
  }
  return out;
}

}  // namespace bjop::detail
