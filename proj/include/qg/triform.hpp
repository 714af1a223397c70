#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qg/linalg.hpp"
#include "qg/unipoly.hpp"

namespace qg::poly {

using num::Mat3;
using num::Vec3;

using Exponents = std::array<long, 3>;

// Homogeneous form in X, Y, Z. Stored coefficients are nonzero; exponent
// triples sum to the declared degree; the zero form has an empty map.
class TriForm {
public:
  TriForm(CtxPtr ctx, long degree) : ctx_(std::move(ctx)), degree_(degree) {}
  TriForm(CtxPtr ctx, long degree, std::map<Exponents, FieldElement> terms);

  static TriForm zero(const CtxPtr& ctx, long degree) { return TriForm(ctx, degree); }
  static TriForm monomial(const CtxPtr& ctx, Exponents e, const FieldElement& c);

  const CtxPtr& context() const { return ctx_; }
  long degree() const { return degree_; }
  const std::map<Exponents, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElement coeff(const Exponents& e) const;

  TriForm operator+(const TriForm& o) const;  // pre: equal degrees
  TriForm operator-(const TriForm& o) const;
  TriForm operator-() const;
  TriForm operator*(const TriForm& o) const;  // degrees add
  TriForm scaled(const FieldElement& c) const;
  bool operator==(const TriForm& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }
  bool operator!=(const TriForm& o) const { return !(*this == o); }

  FieldElement evaluate(const Vec3& p) const;
  TriForm partial(int axis) const;  // degree drops by one

  // True iff F = c * (*this) for some nonzero scalar c; reports c.
  bool proportional_to(const TriForm& F, FieldElement* scalar = nullptr) const;

  std::string str() const;  // descending lex over (i,j,k)

private:
  CtxPtr ctx_;
  long degree_;
  std::map<Exponents, FieldElement> terms_;
};

// F(A*(X,Y,Z)^t); degree preserved. Errors: SINGULAR_MATRIX.
TriForm substitute_linear(const TriForm& F, const Mat3& A);

struct XSlices {
  // i -> a_i(Y,Z), homogeneous of degree d - i; only nonzero slices stored.
  std::map<long, TriForm> slices;
  long r = -1;  // max i with a_i != 0; -1 for the zero form
};

// Decomposition F = sum a_i(Y,Z) X^i.
XSlices x_slices(const TriForm& F);

// g(t) = F(P0 + t*P1) with both triples normalized on the first nonzero
// coordinate; t = 0 lands on P0. Errors: DEGENERATE_LINE, LINE_IN_CURVE.
UniPoly restrict_to_line(const TriForm& F, const Vec3& P0, const Vec3& P1);

// Determinant of the matrix of second partials; degree 3(d-2). Pre: d >= 2.
TriForm hessian_form(const TriForm& F);

// First nonzero coordinate scaled to 1. Errors: BAD_PARAMS on the zero triple.
Vec3 normalize_triple(const Vec3& v);

}  // namespace qg::poly
