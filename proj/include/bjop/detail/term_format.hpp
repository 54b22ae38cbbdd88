#pragma once

#include <map>
#include <string>

#include "bjop/gaussian_rational.hpp"
#include "bjop/multi_index.hpp"

namespace bjop::detail {

/// Shared printer for symbol and operator polynomials.  Terms are emitted
/// in descending graded-lex order with explicit '*' between factors, so the
/// output re-enters the expression grammar unambiguously (e.g. a negative
/// unit coefficient prints as "-1*x^2", never "-x^2").
std::string format_terms(const std::map<ExpKey, GaussianRational, GradedLex>& terms,
                         int dim, const char* xbase, const char* kbase);

}  // namespace bjop::detail
