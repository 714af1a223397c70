#pragma once

#include <gmpxx.h>

#include <string>

#include "qg/error.hpp"

namespace qg::num {

// Canonical form (reduced, positive denominator) is maintained by GMP after
// explicit canonicalization; every constructor path below canonicalizes.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error(Errc::DIVISION_BY_ZERO, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p" and "p/q" with optional leading minus.
Rational parse_rational(const std::string& text);

inline std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace qg::num
