#pragma once

#include <string>
#include <vector>

#include "qg/field.hpp"

namespace qg::poly {

using num::CtxPtr;
using num::FieldElement;

// Coefficients lowest degree first; trailing zeros stripped; zero = empty.
class UniPoly {
public:
  explicit UniPoly(CtxPtr ctx) : ctx_(std::move(ctx)) {}
  UniPoly(CtxPtr ctx, std::vector<FieldElement> coeffs);

  static UniPoly zero(const CtxPtr& ctx) { return UniPoly(ctx); }
  static UniPoly constant(const FieldElement& c);
  // c0 + c1 t
  static UniPoly linear(const FieldElement& c0, const FieldElement& c1);

  const CtxPtr& context() const { return ctx_; }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  FieldElement coeff(long k) const;
  FieldElement leading() const;  // pre: nonzero

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const FieldElement& c) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  FieldElement evaluate(const FieldElement& t) const;
  UniPoly derivative() const;
  UniPoly monic() const;  // pre: nonzero
  // Quotient and remainder over the field; pre: divisor nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  UniPoly pow(long k) const;  // k >= 0

  std::string str(const std::string& var = "t") const;

private:
  CtxPtr ctx_;
  std::vector<FieldElement> c_;
};

// Monic gcd over the field; gcd(0,0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

// Subresultant PRS resultant. Zero iff the inputs share a root in the
// algebraic closure; res(c, d) = 1 for two nonzero constants.
FieldElement resultant(const UniPoly& f, const UniPoly& g);

// Largest m with (t - t0)^m | f, by repeated exact division.
// Errors: ZERO_POLY.
long vanishing_order(const UniPoly& f, const FieldElement& t0);

}  // namespace qg::poly
