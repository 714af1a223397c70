#include <algorithm>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "qg/expr.hpp"
#include "qg/groups.hpp"

using namespace qg;
using namespace testutil;
using groups::HomologyDecomposition;
using groups::MatrixGroup;
using num::make_context;
using num::parse_element;
using plane::ProjLine;
using plane::ProjPoint;
using plane::ProjTransform;
using poly::TriForm;

namespace {

Mat3 perm_matrix(const CtxPtr& ctx, int p0, int p1, int p2) {
  Mat3 m = Mat3::zero(ctx);
  FieldElement one = FieldElement::one(ctx);
  m(p0, 0) = one;
  m(p1, 1) = one;
  m(p2, 2) = one;
  return m;
}

TriForm fermat(const CtxPtr& ctx, long d) {
  FieldElement one = FieldElement::one(ctx);
  return TriForm::monomial(ctx, {d, 0, 0}, one) + TriForm::monomial(ctx, {0, d, 0}, one) +
         TriForm::monomial(ctx, {0, 0, d}, one);
}

// S3 as permutation matrices, generated by the two adjacent swaps.
MatrixGroup sym3(const CtxPtr& ctx) {
  return groups::closure({ProjTransform(perm_matrix(ctx, 1, 0, 2)),
                          ProjTransform(perm_matrix(ctx, 0, 2, 1))});
}

}  // namespace

TEST_CASE("closure reaches the expected orders") {
  CtxPtr ctx = make_context(12);
  FieldElement one = FieldElement::one(ctx);

  MatrixGroup cyc = groups::closure({ProjTransform(Mat3::diagonal(num::zeta(ctx, 6), one, one))});
  CHECK(cyc.order() == 6);
  for (long k = 1; k <= 6; ++k) {
    ProjTransform t(Mat3::diagonal(num::zeta(ctx, 6).pow(k), one, one));
    CHECK(cyc.contains(t));
  }

  CtxPtr c1 = make_context(1);
  MatrixGroup s3 = sym3(c1);
  CHECK(s3.order() == 6);
  CHECK(s3.same_elements(sym3(c1)));

  CHECK(throws_code(Errc::BAD_PARAMS, [] { groups::closure({}); }));
  CHECK(throws_code(Errc::BAD_PARAMS, [&] { groups::closure(s3.generators, 0); }));
}

TEST_CASE("closure cap carries the partial group") {
  CtxPtr c1 = make_context(1);
  try {
    groups::closure({ProjTransform(perm_matrix(c1, 1, 0, 2)),
                     ProjTransform(perm_matrix(c1, 0, 2, 1))},
                    3);
    FAIL("expected ClosureCapExceeded");
  } catch (const groups::ClosureCapExceeded& e) {
    CHECK(e.code() == Errc::CAP_EXCEEDED);
    CHECK(e.partial().order() == 4);
    CHECK(e.partial().contains(ProjTransform::identity(c1)));
  }
}

TEST_CASE("closures satisfy the group axioms") {
  CtxPtr c1 = make_context(1);
  CtxPtr c12 = make_context(12);
  FieldElement one = FieldElement::one(c12);
  std::vector<MatrixGroup> groups_under_test = {
      sym3(c1),
      groups::closure({ProjTransform(Mat3::diagonal(num::zeta(c12, 4), one, one)),
                       ProjTransform(perm_matrix(c12, 1, 0, 2))})};
  CHECK(groups_under_test[1].order() == 32);

  for (const MatrixGroup& g : groups_under_test) {
    CHECK(g.contains(ProjTransform::identity(g.elements[0].context())));
    for (const ProjTransform& a : g.elements) {
      CHECK(g.contains(a.inverse()));
      for (const ProjTransform& b : g.elements) CHECK(g.contains(a * b));
    }
  }
}

TEST_CASE("curve preservation under transforms") {
  CtxPtr c4 = make_context(4);
  TriForm F4 = fermat(c4, 4);
  FieldElement one = FieldElement::one(c4);

  CHECK(groups::transform_preserves_curve(
      ProjTransform(Mat3::diagonal(num::zeta(c4, 4), one, one)), F4));
  Mat3 shear = Mat3::identity(c4);
  shear(0, 1) = one;
  CHECK(!groups::transform_preserves_curve(ProjTransform(shear), F4));

  const Fixture& hess = fixture("hessian_sextic");
  CHECK(groups::transform_preserves_curve(
      ProjTransform(perm_matrix(hess.curve.ctx, 1, 2, 0)), hess.curve.form));

  MatrixGroup big = groups::closure({ProjTransform(Mat3::diagonal(num::zeta(c4, 4), one, one)),
                                     ProjTransform(perm_matrix(c4, 1, 0, 2))});
  CHECK(big.order() == 32);
  CHECK(groups::preserves_curve(big, F4));
}

TEST_CASE("homology decomposition classifies 3x3 transforms") {
  CtxPtr ctx = make_context(12);
  FieldElement one = FieldElement::one(ctx);
  FieldElement zero = FieldElement::zero(ctx);
  FieldElement two = parse_element(ctx, "2");

  auto dec = groups::homology_decomposition(ProjTransform::identity(ctx));
  CHECK(dec.kind == HomologyDecomposition::Kind::Identity);
  dec = groups::homology_decomposition(ProjTransform(Mat3::diagonal(two, two, two)));
  CHECK(dec.kind == HomologyDecomposition::Kind::Identity);

  FieldElement z6 = num::zeta(ctx, 6);
  dec = groups::homology_decomposition(ProjTransform(Mat3::diagonal(z6, one, one)));
  REQUIRE(dec.kind == HomologyDecomposition::Kind::Homology);
  CHECK(*dec.center == ProjPoint(one, zero, zero));
  CHECK(*dec.axis == ProjLine({one, zero, zero}));
  CHECK(*dec.ratio == z6);

  Mat3 refl = Mat3::identity(ctx);
  refl(0, 0) = -one;
  refl(0, 2) = -one;
  dec = groups::homology_decomposition(ProjTransform(refl));
  REQUIRE(dec.kind == HomologyDecomposition::Kind::Homology);
  CHECK(*dec.center == ProjPoint(one, zero, zero));
  CHECK(*dec.axis == ProjLine({two, zero, one}));
  CHECK(*dec.ratio == -one);

  Mat3 shear = Mat3::identity(ctx);
  shear(0, 1) = one;
  dec = groups::homology_decomposition(ProjTransform(shear));
  REQUIRE(dec.kind == HomologyDecomposition::Kind::Elation);
  CHECK(*dec.center == ProjPoint(one, zero, zero));
  CHECK(*dec.axis == ProjLine({zero, one, zero}));
  CHECK(!dec.ratio.has_value());

  dec = groups::homology_decomposition(
      ProjTransform(Mat3::diagonal(one, two, parse_element(ctx, "4"))));
  CHECK(dec.kind == HomologyDecomposition::Kind::NotCentral);

  CtxPtr c1 = make_context(1);
  Mat3 rot = Mat3::zero(c1);
  FieldElement r1 = FieldElement::one(c1);
  rot(0, 1) = -r1;
  rot(1, 0) = r1;
  rot(2, 2) = r1;
  dec = groups::homology_decomposition(ProjTransform(rot));
  CHECK(dec.kind == HomologyDecomposition::Kind::NotCentral);
}

TEST_CASE("triangle-symmetric homology over the cube roots") {
  CtxPtr c3 = make_context(3);
  FieldElement one = FieldElement::one(c3);
  FieldElement w = num::zeta(c3, 3);
  Mat3 tau = Mat3::zero(c3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) tau(i, j) = i == j ? w : one;

  auto dec = groups::homology_decomposition(ProjTransform(tau));
  REQUIRE(dec.kind == HomologyDecomposition::Kind::Homology);
  CHECK(*dec.center == ProjPoint(one, one, one));
  CHECK(*dec.axis == ProjLine({one, one, one}));
  CHECK(*dec.ratio == w * w);
  CHECK(dec.ratio->pow(3) == one);
  CHECK(*dec.ratio != one);
}

TEST_CASE("normality by generator conjugation") {
  CtxPtr c1 = make_context(1);
  MatrixGroup s3 = sym3(c1);
  FieldElement one = FieldElement::one(c1);

  MatrixGroup flip = groups::closure({ProjTransform(perm_matrix(c1, 1, 0, 2))});
  CHECK(flip.order() == 2);
  CHECK(!groups::is_normal_subgroup(flip, s3));

  MatrixGroup alt3 = groups::closure({ProjTransform(perm_matrix(c1, 1, 2, 0))});
  CHECK(alt3.order() == 3);
  CHECK(groups::is_normal_subgroup(alt3, s3));
  CHECK(groups::is_normal_subgroup(s3, s3));

  MatrixGroup stray = groups::closure({ProjTransform(Mat3::diagonal(-one, one, one))});
  CHECK(throws_code(Errc::NOT_SUBGROUP, [&] { groups::is_normal_subgroup(stray, s3); }));
}

TEST_CASE("group report on the triangle symmetries") {
  CtxPtr c1 = make_context(1);
  MatrixGroup s3 = sym3(c1);
  groups::GroupReport rep = groups::group_report(s3);

  CHECK(rep.order == 6);
  CHECK(rep.generator_count == 2);
  CHECK(rep.element_order_histogram == std::map<long, long>{{1, 1}, {2, 3}, {3, 2}});
  CHECK(rep.involution_count == 3);

  FieldElement one = FieldElement::one(c1);
  FieldElement zero = FieldElement::zero(c1);
  std::vector<ProjPoint> want = {ProjPoint(one, -one, zero), ProjPoint(one, zero, -one),
                                 ProjPoint(zero, one, -one)};
  std::sort(want.begin(), want.end());
  CHECK(rep.homology_centers == want);
}
