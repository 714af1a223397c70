#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qg/rational.hpp"

namespace qg::num {

// Q(zeta_N) with an optional formal square root s of a nonzero element w.
// The adjunct is never tested for squareness; if w happens to be a square the
// quotient ring has zero divisors and inversion reports them lazily.
struct FieldContext {
  long conductor = 1;
  std::vector<Rational> modulus;  // Phi_N, lowest degree first, monic
  long degree = 1;                // phi(N)
  std::optional<std::vector<Rational>> adjunct;  // w as a u-vector, nonzero
  // x^(degree+k) mod Phi_N for k in [0, degree-2]; keeps multiplication to a
  // single fold with no cascading.
  std::vector<std::vector<Rational>> reduction;
};

using CtxPtr = std::shared_ptr<const FieldContext>;

// Lowest degree first, monic, degree phi(N). Computed by iterated exact
// division of x^N - 1 by Phi_d over the proper divisors d of N.
std::vector<Rational> cyclotomic_polynomial(long n);

CtxPtr make_context(long conductor);
// w_expr uses the coefficient-expression grammar without 's'.
CtxPtr make_context(long conductor, const std::string& w_expr);
CtxPtr make_context(long conductor, const Rational& w);

bool same_field(const CtxPtr& a, const CtxPtr& b);

class FieldElement {
public:
  FieldElement() = default;  // detached; any use except assignment asserts

  static FieldElement zero(const CtxPtr& ctx);
  static FieldElement one(const CtxPtr& ctx);
  static FieldElement from_rational(const CtxPtr& ctx, const Rational& q);
  static FieldElement adjunct_root(const CtxPtr& ctx);
  static FieldElement from_parts(const CtxPtr& ctx, std::vector<Rational> u,
                                 std::vector<Rational> v);

  const CtxPtr& context() const { return ctx_; }
  const std::vector<Rational>& u() const { return u_; }
  const std::vector<Rational>& v() const { return v_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational as_rational() const;  // pre: is_rational()

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement pow(long k) const;  // negative k inverts first

  // Canonical rendering in the coefficient-expression grammar;
  // parse(str()) == *this.
  std::string str() const;

private:
  FieldElement(CtxPtr ctx, std::vector<Rational> u, std::vector<Rational> v);

  CtxPtr ctx_;
  std::vector<Rational> u_, v_;
};

FieldElement invert(const FieldElement& x);

// Primitive n-th root of unity. Exists iff n | N, or N is odd and n | 2N
// (zeta_{2N} = -zeta_N^{(N+1)/2}). Otherwise throws RootsMissing carrying the
// smallest conductor that would work.
FieldElement zeta(const CtxPtr& ctx, long n);

}  // namespace qg::num
