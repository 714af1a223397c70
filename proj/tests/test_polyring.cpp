#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "qg/expr.hpp"
#include "qg/triform.hpp"
#include "qg/unipoly.hpp"

using namespace qg;
using namespace testutil;
using num::make_context;
using num::parse_element;
using poly::TriForm;
using poly::UniPoly;

namespace {

UniPoly rand_poly(const CtxPtr& ctx, Rng& rng, long max_deg) {
  long deg = rand_int(rng, 0, max_deg);
  std::vector<FieldElement> c;
  for (long i = 0; i < deg; ++i) c.push_back(rand_element(ctx, rng));
  c.push_back(rand_nonzero(ctx, rng));
  return UniPoly(ctx, std::move(c));
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("division leaves a small remainder and reassembles") {
  CtxPtr ctx = make_context(4);
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    UniPoly f = rand_poly(ctx, rng, 6);
    UniPoly g = rand_poly(ctx, rng, 3);
    auto [q, r] = f.divmod(g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
  }
}

TEST_CASE("gcd scales with a common factor") {
  CtxPtr ctx = make_context(4);
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    UniPoly f = rand_poly(ctx, rng, 4);
    UniPoly g = rand_poly(ctx, rng, 4);
    UniPoly h = rand_poly(ctx, rng, 3);
    UniPoly d = poly::poly_gcd(f, g);
    CHECK(f.divmod(d).second.is_zero());
    CHECK(g.divmod(d).second.is_zero());
    CHECK(poly::poly_gcd(f * h, g * h) == (d * h).monic());
  }
  UniPoly f = rand_poly(ctx, rng, 4);
  CHECK(poly::poly_gcd(f, UniPoly::zero(ctx)) == f.monic());
  CHECK(poly::poly_gcd(UniPoly::zero(ctx), UniPoly::zero(ctx)).is_zero());
}

TEST_CASE("resultant matches the root product") {
  CtxPtr ctx = make_context(12);
  FieldElement one = FieldElement::one(ctx);
  Rng rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<FieldElement> alphas, betas;
    for (int i = 0; i < 3; ++i) alphas.push_back(rand_element(ctx, rng));
    for (int i = 0; i < 2; ++i) betas.push_back(rand_element(ctx, rng));
    UniPoly f = UniPoly::constant(one), g = UniPoly::constant(one);
    for (const FieldElement& a : alphas) f = f * UniPoly::linear(-a, one);
    for (const FieldElement& b : betas) g = g * UniPoly::linear(-b, one);
    FieldElement expect = one;
    for (const FieldElement& a : alphas)
      for (const FieldElement& b : betas) expect *= a - b;
    CHECK(poly::resultant(f, g) == expect);

    // Leading coefficients scale by the opposite degree.
    FieldElement lf = rand_nonzero(ctx, rng);
    CHECK(poly::resultant(f.scaled(lf), g) == expect * lf.pow(g.degree()));
    CHECK(poly::resultant(f, g.scaled(lf)) == expect * lf.pow(f.degree()));
  }
}

TEST_CASE("resultant sign and degeneracy cases") {
  CtxPtr ctx = make_context(4);
  FieldElement one = FieldElement::one(ctx);
  UniPoly f(ctx, {one, FieldElement::zero(ctx), one});  // t^2 + 1
  UniPoly g = UniPoly::linear(-one, one);               // t - 1
  CHECK(poly::resultant(f, g) == parse_element(ctx, "2"));

  FieldElement a = parse_element(ctx, "1+z"), b = parse_element(ctx, "3");
  CHECK(poly::resultant(UniPoly::linear(-a, one), UniPoly::linear(-b, one)) == a - b);

  CHECK(poly::resultant(f, f).is_zero());
  CHECK(poly::resultant(f * g, g).is_zero());
  CHECK(poly::resultant(UniPoly::constant(b), UniPoly::constant(a)).is_one());
}

TEST_CASE("vanishing order counts the root multiplicity") {
  CtxPtr ctx = make_context(4);
  FieldElement one = FieldElement::one(ctx);
  FieldElement t0 = parse_element(ctx, "1+z");
  Rng rng(6);
  for (long k = 0; k <= 4; ++k) {
    UniPoly u = rand_poly(ctx, rng, 2);
    if (u.evaluate(t0).is_zero()) u = u + UniPoly::constant(one);
    UniPoly f = u * UniPoly::linear(-t0, one).pow(k);
    CHECK(poly::vanishing_order(f, t0) == k);
  }
  CHECK(throws_code(Errc::ZERO_POLY, [&] { poly::vanishing_order(UniPoly::zero(ctx), t0); }));
}

TEST_CASE("derivative satisfies the product rule") {
  CtxPtr ctx = make_context(3);
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    UniPoly f = rand_poly(ctx, rng, 4);
    UniPoly g = rand_poly(ctx, rng, 4);
    CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
  }
}

TEST_CASE("linear substitution agrees with pointwise evaluation") {
  CtxPtr ctx = make_context(4);
  Rng rng(8);
  for (int iter = 0; iter < 50; ++iter) {
    TriForm F = rand_form(ctx, rng, rand_int(rng, 1, 4), 6);
    Mat3 A = rand_invertible(ctx, rng);
    TriForm FA = poly::substitute_linear(F, A);
    for (int k = 0; k < 5; ++k) {
      Vec3 v = rand_vec3(ctx, rng);
      CHECK(FA.evaluate(v) == F.evaluate(A * v));
    }
    Mat3 B = rand_invertible(ctx, rng);
    CHECK(poly::substitute_linear(FA, B) == poly::substitute_linear(F, A * B));
  }
  TriForm F = rand_form(ctx, rng, 3, 5);
  CHECK(throws_code(Errc::SINGULAR_MATRIX,
                    [&] { poly::substitute_linear(F, Mat3::zero(ctx)); }));
}

TEST_CASE("slices reassemble the form") {
  CtxPtr ctx = make_context(4);
  FieldElement one = FieldElement::one(ctx);
  Rng rng(9);
  for (int iter = 0; iter < 50; ++iter) {
    TriForm F = rand_form(ctx, rng, rand_int(rng, 1, 5), 7);
    poly::XSlices s = poly::x_slices(F);
    TriForm sum = TriForm::zero(ctx, F.degree());
    long max_seen = -1;
    for (const auto& [i, a] : s.slices) {
      CHECK(!a.is_zero());
      sum = sum + a * TriForm::monomial(ctx, {i, 0, 0}, one);
      max_seen = i;
    }
    CHECK(sum == F);
    CHECK(s.r == max_seen);
  }

  // Binomial slices of (X + Y)^4.
  Mat3 A = Mat3::identity(ctx);
  A(1, 0) = one;
  TriForm F = poly::substitute_linear(TriForm::monomial(ctx, {0, 4, 0}, one), A);
  poly::XSlices s = poly::x_slices(F);
  CHECK(s.r == 4);
  for (long i = 0; i <= 4; ++i) {
    FieldElement c = s.slices.at(i).coeff({0, 4 - i, 0});
    CHECK(c == FieldElement::from_rational(ctx, Rational(binom(4, i))));
  }
}

TEST_CASE("restriction to a line") {
  CtxPtr ctx = make_context(8);
  FieldElement one = FieldElement::one(ctx);
  FieldElement zero = FieldElement::zero(ctx);
  TriForm conic = TriForm::monomial(ctx, {1, 0, 1}, one) +
                  TriForm::monomial(ctx, {0, 2, 0}, -one);  // XZ - Y^2
  UniPoly g = poly::restrict_to_line(conic, {one, zero, zero}, {zero, zero, one});
  CHECK(g == UniPoly::linear(zero, one));

  TriForm split = TriForm::monomial(ctx, {1, 1, 0}, one);  // XY
  CHECK(throws_code(Errc::LINE_IN_CURVE, [&] {
    poly::restrict_to_line(split, {zero, zero, one}, {zero, one, zero});
  }));
  CHECK(throws_code(Errc::DEGENERATE_LINE, [&] {
    poly::restrict_to_line(conic, {one, zero, zero}, {one, zero, zero});
  }));

  // A degree-d curve meets a generic line in a degree-d restriction.
  TriForm quartic = TriForm::monomial(ctx, {4, 0, 0}, one) +
                    TriForm::monomial(ctx, {0, 4, 0}, one) +
                    TriForm::monomial(ctx, {0, 0, 4}, one);
  UniPoly h = poly::restrict_to_line(quartic, {one, one, zero}, {zero, one, one});
  CHECK(h.degree() == 4);
}

TEST_CASE("hessian matches the cofactor expansion and the chain rule") {
  CtxPtr ctx = make_context(4);
  Rng rng(10);
  for (int iter = 0; iter < 30; ++iter) {
    TriForm F = rand_form(ctx, rng, rand_int(rng, 2, 4), 6);
    std::array<std::array<TriForm, 3>, 3> H = {{
        {F.partial(0).partial(0), F.partial(0).partial(1), F.partial(0).partial(2)},
        {F.partial(1).partial(0), F.partial(1).partial(1), F.partial(1).partial(2)},
        {F.partial(2).partial(0), F.partial(2).partial(1), F.partial(2).partial(2)},
    }};
    TriForm det = H[0][0] * (H[1][1] * H[2][2] - H[1][2] * H[2][1]) -
                  H[0][1] * (H[1][0] * H[2][2] - H[1][2] * H[2][0]) +
                  H[0][2] * (H[1][0] * H[2][1] - H[1][1] * H[2][0]);
    CHECK(poly::hessian_form(F) == det);

    Mat3 A = rand_invertible(ctx, rng);
    TriForm lhs = poly::hessian_form(poly::substitute_linear(F, A));
    TriForm rhs = poly::substitute_linear(poly::hessian_form(F), A).scaled(A.det() * A.det());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("forms satisfy the Euler relation") {
  CtxPtr ctx = make_context(3);
  FieldElement one = FieldElement::one(ctx);
  Rng rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    long d = rand_int(rng, 1, 5);
    TriForm F = rand_form(ctx, rng, d, 6);
    TriForm sum = F.partial(0) * TriForm::monomial(ctx, {1, 0, 0}, one) +
                  F.partial(1) * TriForm::monomial(ctx, {0, 1, 0}, one) +
                  F.partial(2) * TriForm::monomial(ctx, {0, 0, 1}, one);
    CHECK(sum == F.scaled(FieldElement::from_rational(ctx, Rational(d))));
  }
}

TEST_CASE("proportionality detection") {
  CtxPtr ctx = make_context(4);
  Rng rng(12);
  TriForm F = rand_form(ctx, rng, 3, 5);
  FieldElement c = parse_element(ctx, "2 - z");
  FieldElement got = FieldElement::zero(ctx);
  CHECK(F.proportional_to(F.scaled(c), &got));
  CHECK(got == c);
  CHECK(!F.proportional_to(F + TriForm::monomial(ctx, {3, 0, 0}, parse_element(ctx, "1"))));
  CHECK(!F.proportional_to(TriForm::zero(ctx, 3)));
  CHECK(throws_code(Errc::BAD_PARAMS, [&] {
    poly::normalize_triple({FieldElement::zero(ctx), FieldElement::zero(ctx),
                            FieldElement::zero(ctx)});
  }));
}
