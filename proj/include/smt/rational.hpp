#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace smt {

/// Exact rational coefficient. Every coefficient in the engine is one of these.
using Rational = mpq_class;
using Integer = mpz_class;

/// p/q in lowest terms. mpq_class(p, q) alone does not canonicalize.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// "p/q" with q > 0, always including the denominator.
std::string to_string(const Rational& q);

/// Accepts "p/q", "p" and optional leading sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace smt
