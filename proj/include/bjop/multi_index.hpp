#pragma once

#include <cstdint>
#include <vector>

namespace bjop {

using MultiIndex = std::vector<std::uint32_t>;

inline unsigned total_degree(const MultiIndex& a) {
  unsigned s = 0;
  for (auto e : a) s += e;
  return s;
}

inline MultiIndex unit_index(int dim, int j, std::uint32_t e = 1) {
  MultiIndex m(static_cast<std::size_t>(dim), 0);
  m[static_cast<std::size_t>(j)] = e;
  return m;
}

/// Exponent pair of a term: x^x for the position part and either xi^k
/// (symbols) or D^k (operators) for the dual part.
struct ExpKey {
  MultiIndex x;
  MultiIndex k;

  friend bool operator==(const ExpKey& a, const ExpKey& b) {
    return a.x == b.x && a.k == b.k;
  }
};

/// Graded-lexicographic term order: total degree first, then x exponents,
/// then dual exponents.  Gives every polynomial a unique canonical form.
struct GradedLex {
  bool operator()(const ExpKey& a, const ExpKey& b) const {
    unsigned da = total_degree(a.x) + total_degree(a.k);
    unsigned db = total_degree(b.x) + total_degree(b.k);
    if (da != db) return da < db;
    if (a.x != b.x) return a.x < b.x;
    return a.k < b.k;
  }
};

}  // namespace bjop
