#include <optional>
#include <set>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "properties.hpp"
#include "qg/corpus.hpp"
#include "qg/expr.hpp"
#include "qg/qgal.hpp"

using namespace qg;
using namespace testutil;
using num::make_context;
using num::parse_element;
using plane::ProjLine;
using plane::ProjPoint;
using plane::ProjTransform;
using poly::TriForm;
using qgal::QGCertificate;

namespace {

TriForm fermat(const CtxPtr& ctx, long d) {
  FieldElement one = FieldElement::one(ctx);
  return TriForm::monomial(ctx, {d, 0, 0}, one) + TriForm::monomial(ctx, {0, d, 0}, one) +
         TriForm::monomial(ctx, {0, 0, d}, one);
}

ProjPoint pt(const CtxPtr& ctx, const std::string& x, const std::string& y,
             const std::string& z) {
  return ProjPoint(parse_element(ctx, x), parse_element(ctx, y), parse_element(ctx, z));
}

Mat3 standard(const FieldElement& z, const FieldElement& a, const FieldElement& b) {
  Mat3 m = Mat3::identity(z.context());
  m(0, 0) = z;
  m(0, 1) = a;
  m(0, 2) = b;
  return m;
}

std::optional<bool> verdict_ok(const qgal::CensusReport& rep, const std::string& name) {
  for (const auto& v : rep.verdicts)
    if (v.name == name) return v.ok;
  return std::nullopt;
}

QGCertificate fake_cert(const ProjPoint& p, bool on_curve, long n) {
  return QGCertificate{p, on_curve, 2 * n, n, std::nullopt, std::nullopt};
}

}  // namespace

TEST_CASE("homology solver pins the unique shear") {
  CtxPtr ctx = make_context(12);
  TriForm F6 = fermat(ctx, 6);
  FieldElement one = FieldElement::one(ctx);
  FieldElement zero = FieldElement::zero(ctx);

  // Recentering the sextic at (1:0:1) gives X^6 + Y^6 + (X+Z)^6.
  TriForm sheared = qgal::normalize_center(F6, pt(ctx, "1", "0", "1")).form;

  auto sol = qgal::solve_homology(sheared, 6, -one);
  REQUIRE(sol.has_value());
  CHECK(sol->first == zero);
  CHECK(sol->second == -one);
  // Independent identity check of the returned homology.
  TriForm lhs = poly::substitute_linear(sheared, standard(-one, sol->first, sol->second));
  CHECK(lhs == sheared);

  CHECK(!qgal::solve_homology(sheared, 6, num::zeta(ctx, 3)).has_value());
  CHECK(!qgal::solve_homology(sheared, 6, num::zeta(ctx, 6)).has_value());

  for (long m : {2L, 3L, 6L}) {
    auto diag = qgal::solve_homology(F6, 6, num::zeta(ctx, m));
    REQUIRE(diag.has_value());
    CHECK(diag->first == zero);
    CHECK(diag->second == zero);
  }

  CHECK(throws_code(Errc::BAD_PARAMS, [&] { qgal::solve_homology(sheared, 4, -one); }));
  TriForm line = TriForm::monomial(ctx, {1, 0, 0}, one);
  CHECK(throws_code(Errc::BAD_PARAMS, [&] { qgal::solve_homology(line, 1, -one); }));
}

TEST_CASE("order detection at marked points") {
  CtxPtr c4 = make_context(4);
  TriForm F4 = fermat(c4, 4);
  FieldElement i = num::zeta(c4, 4);
  FieldElement one4 = FieldElement::one(c4);
  FieldElement zero4 = FieldElement::zero(c4);

  QGCertificate vert = qgal::quasi_galois_order(F4, pt(c4, "1", "0", "0"));
  CHECK(vert.n == 4);
  CHECK(vert.r == 4);
  CHECK(vert.galois());
  CHECK(!vert.on_curve);
  CHECK(*vert.generator == ProjTransform(Mat3::diagonal(i, one4, one4)));
  CHECK(*vert.axis == ProjLine({one4, zero4, zero4}));
  CHECK(qgal::verify_certificate(vert, F4));

  const Fixture& cop = fixture("coprime_example");
  QGCertificate p1 = qgal::quasi_galois_order(cop.curve.form, cop.curve.seeds[0]);
  QGCertificate p2 = qgal::quasi_galois_order(cop.curve.form, cop.curve.seeds[1]);
  CHECK(p1.point == pt(cop.curve.ctx, "1", "0", "0"));
  CHECK(p1.n == 3);
  CHECK(p1.r == 6);
  CHECK(p1.on_curve);
  CHECK(p2.n == 2);
  CHECK(p2.r == 6);
  CHECK(p2.on_curve);

  const Fixture& hess = fixture("hessian_sextic");
  QGCertificate diag = qgal::quasi_galois_order(hess.curve.form, pt(hess.curve.ctx, "1", "1", "1"));
  CHECK(diag.n == 3);
  CHECK(diag.r == 6);
  CHECK(!diag.on_curve);

  const Fixture& q = fixture("quartic_family", {{"a", "1"}, {"b", "0"}, {"c", "0"}});
  QGCertificate generic = qgal::quasi_galois_order(q.curve.form, pt(q.curve.ctx, "1", "2", "3"));
  CHECK(generic.n == 1);
  CHECK(!generic.generator.has_value());
  CHECK(!generic.axis.has_value());
  CHECK(qgal::verify_certificate(generic, q.curve.form));
}

TEST_CASE("missing roots are reported with a workable conductor") {
  CtxPtr c1 = make_context(1);
  TriForm F = fermat(c1, 4);
  try {
    qgal::quasi_galois_order(F, pt(c1, "1", "0", "0"));
    FAIL("expected RootsMissing");
  } catch (const RootsMissing& e) {
    CHECK(e.order() == 4);
    CHECK(e.sufficient_conductor() == 4);
  }

  CtxPtr c4 = make_context(4);
  TriForm F6 = fermat(c4, 6);
  try {
    qgal::quasi_galois_order(F6, pt(c4, "1", "0", "0"));
    FAIL("expected RootsMissing");
  } catch (const RootsMissing& e) {
    CHECK(e.order() == 3);  // smallest missing divisor, found before any solve
    CHECK(e.sufficient_conductor() == 12);
  }
}

TEST_CASE("certificate verification rejects tampering") {
  CtxPtr c4 = make_context(4);
  TriForm F4 = fermat(c4, 4);
  QGCertificate good = qgal::quasi_galois_order(F4, pt(c4, "1", "0", "0"));
  REQUIRE(qgal::verify_certificate(good, F4));

  QGCertificate wrong_n = good;
  wrong_n.n = 2;
  CHECK(!qgal::verify_certificate(wrong_n, F4));

  QGCertificate wrong_point = good;
  wrong_point.point = pt(c4, "0", "1", "0");
  CHECK(!qgal::verify_certificate(wrong_point, F4));

  QGCertificate wrong_axis = good;
  wrong_axis.axis = ProjLine({FieldElement::zero(c4), FieldElement::one(c4),
                              FieldElement::zero(c4)});
  CHECK(!qgal::verify_certificate(wrong_axis, F4));

  QGCertificate wrong_r = good;
  wrong_r.r = 2;
  CHECK(!qgal::verify_certificate(wrong_r, F4));

  QGCertificate foreign = good;
  foreign.generator = ProjTransform(Mat3::diagonal(FieldElement::one(c4), num::zeta(c4, 4),
                                                   FieldElement::one(c4)));
  CHECK(!qgal::verify_certificate(foreign, F4));
}

TEST_CASE("fixed locus of a homology") {
  CtxPtr ctx = make_context(12);
  FieldElement one = FieldElement::one(ctx);
  FieldElement zero = FieldElement::zero(ctx);
  FieldElement z = num::zeta(ctx, 6);

  auto [p, l] = qgal::fixed_locus(ProjTransform(Mat3::diagonal(z, one, one)));
  CHECK(p == ProjPoint(one, zero, zero));
  CHECK(l == ProjLine({one, zero, zero}));

  Mat3 m = Mat3::identity(ctx);
  m(0, 0) = -one;
  m(0, 2) = -one;
  auto [p2, l2] = qgal::fixed_locus(ProjTransform(m));
  CHECK(p2 == ProjPoint(one, zero, zero));
  CHECK(l2 == ProjLine({parse_element(ctx, "2"), zero, one}));

  CHECK(throws_code(Errc::NOT_HOMOLOGY,
                    [&] { qgal::fixed_locus(ProjTransform::identity(ctx)); }));
  Mat3 elation = Mat3::identity(ctx);
  elation(0, 1) = one;
  CHECK(throws_code(Errc::NOT_HOMOLOGY, [&] { qgal::fixed_locus(ProjTransform(elation)); }));
  CHECK(throws_code(Errc::NOT_HOMOLOGY, [&] {
    qgal::fixed_locus(ProjTransform(
        Mat3::diagonal(one, parse_element(ctx, "2"), parse_element(ctx, "4"))));
  }));
}

TEST_CASE("pair fixation witnesses") {
  const Fixture& kl = fixture("klein_model");
  const CtxPtr& ctx = kl.curve.ctx;
  QGCertificate a = qgal::quasi_galois_order(kl.curve.form, pt(ctx, "1", "0", "0"));
  QGCertificate b = qgal::quasi_galois_order(kl.curve.form, pt(ctx, "0", "1", "0"));
  QGCertificate c = qgal::quasi_galois_order(kl.curve.form, pt(ctx, "1", "1", "0"));
  REQUIRE(a.n == 2);
  REQUIRE(b.n == 2);
  REQUIRE(c.n == 2);
  CHECK(qgal::is_gpair(a, b).is_gpair());
  CHECK(!qgal::is_gpair(a, c).is_gpair());

  const Fixture& q = fixture("quartic_family", {{"a", "1"}, {"b", "0"}, {"c", "0"}});
  QGCertificate trivial = qgal::quasi_galois_order(q.curve.form, pt(q.curve.ctx, "1", "2", "3"));
  CHECK(throws_code(Errc::NOT_QUASI_GALOIS, [&] { qgal::is_gpair(a, trivial); }));
}

TEST_CASE("conjugation transports certificates") {
  CtxPtr c4 = make_context(4);
  TriForm F4 = fermat(c4, 4);
  FieldElement one = FieldElement::one(c4);
  FieldElement i = num::zeta(c4, 4);
  QGCertificate base = qgal::quasi_galois_order(F4, pt(c4, "1", "0", "1"));
  REQUIRE(base.n == 2);

  ProjTransform tau(Mat3::diagonal(i, one, one));
  QGCertificate moved = qgal::conjugate_certificate(base, tau, F4);
  CHECK(moved.point == ProjPoint(i, FieldElement::zero(c4), one));
  CHECK(moved.n == 2);
  CHECK(qgal::verify_certificate(moved, F4));

  QGCertificate direct = qgal::quasi_galois_order(F4, moved.point);
  CHECK(direct.n == moved.n);
  CHECK(direct.r == moved.r);
  CHECK(*direct.generator == *moved.generator);
  CHECK(*direct.axis == *moved.axis);

  QGCertificate same = qgal::conjugate_certificate(base, ProjTransform::identity(c4), F4);
  CHECK(same.point == base.point);
  CHECK(*same.generator == *base.generator);

  Mat3 shear = Mat3::identity(c4);
  shear(0, 1) = one;
  CHECK(throws_code(Errc::NOT_AUTOMORPHISM,
                    [&] { qgal::conjugate_certificate(base, ProjTransform(shear), F4); }));
}

TEST_CASE("discovery closes the seed set under known generators") {
  CtxPtr ctx = make_context(12);
  TriForm F6 = fermat(ctx, 6);
  std::vector<ProjPoint> seeds = {pt(ctx, "1", "0", "0"), pt(ctx, "0", "1", "0"),
                                  pt(ctx, "0", "0", "1"), pt(ctx, "1", "0", "1")};
  std::vector<QGCertificate> found = qgal::discover(F6, seeds);
  CHECK(found.size() == 9);
  qgal::CensusReport rep = qgal::census(F6, found);
  CHECK(rep.outer == std::map<long, long>{{2, 6}, {6, 3}});
  CHECK(rep.inner.empty());
  // The six involution centers all sit on the Y = 0 line.
  for (const QGCertificate& c : found)
    if (c.n == 2) CHECK(c.point.coords()[1].is_zero());

  std::set<std::string> keys;
  for (size_t k = 0; k < found.size(); ++k) {
    CHECK(keys.insert(found[k].point.key()).second);
    if (k > 0) CHECK(found[k - 1].point.key() < found[k].point.key());
  }

  const Fixture& f6 = fixture("fermat", {{"d", "6"}});
  try {
    qgal::discover(f6.curve.form, f6.curve.seeds, 5);
    FAIL("expected DiscoverCapExceeded");
  } catch (const qgal::DiscoverCapExceeded& e) {
    CHECK(e.partial().size() == 5);
    CHECK(e.code() == Errc::CAP_EXCEEDED);
  }
}

TEST_CASE("census cumulative tallies") {
  CtxPtr c1 = make_context(1);
  TriForm C = TriForm::monomial(c1, {8, 0, 0}, FieldElement::one(c1));
  ProjPoint p = pt(c1, "1", "0", "0");
  std::vector<QGCertificate> certs;
  for (int k = 0; k < 3; ++k) certs.push_back(fake_cert(p, true, 2));
  certs.push_back(fake_cert(p, true, 4));
  for (int k = 0; k < 2; ++k) certs.push_back(fake_cert(p, true, 6));
  certs.push_back(fake_cert(p, false, 3));
  certs.push_back(fake_cert(p, true, 1));  // ignored

  qgal::CensusReport rep = qgal::census(C, certs);
  CHECK(rep.degree == 8);
  CHECK(rep.inner == std::map<long, long>{{2, 3}, {4, 1}, {6, 2}});
  CHECK(rep.outer == std::map<long, long>{{3, 1}});
  CHECK(rep.inner_total() == 6);
  CHECK(rep.outer_total() == 1);
  CHECK(rep.inner_cumulative ==
        std::map<long, long>{{2, 6}, {3, 3}, {4, 3}, {5, 2}, {6, 2}});
  CHECK(rep.outer_cumulative == std::map<long, long>{{2, 1}, {3, 1}});
}

TEST_CASE("census bound instances flag violations") {
  CtxPtr c1 = make_context(1);
  ProjPoint p = pt(c1, "1", "0", "0");
  auto curve = [&](long d) { return TriForm::monomial(c1, {d, 0, 0}, FieldElement::one(c1)); };

  // Fifteen inner involutions on a quintic stay within budget.
  std::vector<QGCertificate> certs(15, fake_cert(p, true, 2));
  qgal::CensusReport rep = qgal::census(curve(5), certs);
  CHECK(verdict_ok(rep, "inner class p=2 weighted") == true);
  CHECK(rep.all_bounds_ok());

  // Thirty inner points of order 4 blow the same budget.
  certs.assign(30, fake_cert(p, true, 4));
  rep = qgal::census(curve(5), certs);
  CHECK(verdict_ok(rep, "inner class p=2 weighted") == false);
  CHECK(verdict_ok(rep, "inner class p=2 at most one") == false);
  CHECK(!rep.all_bounds_ok());

  // Four outer points of order 4 on a quartic violate weight and tail.
  certs.assign(4, fake_cert(p, false, 4));
  rep = qgal::census(curve(4), certs);
  CHECK(verdict_ok(rep, "outer weighted") == false);
  CHECK(verdict_ok(rep, "outer tail n=4") == false);
  CHECK(verdict_ok(rep, "outer quartic involutions") == true);

  // Exactly 21 outer involutions on a quartic are allowed, 22 are not.
  certs.assign(21, fake_cert(p, false, 2));
  CHECK(qgal::census(curve(4), certs).all_bounds_ok());
  certs.assign(22, fake_cert(p, false, 2));
  CHECK(verdict_ok(qgal::census(curve(4), certs), "outer quartic involutions") == false);

  // Half-degree outer counts on even degrees.
  certs.assign(13, fake_cert(p, false, 3));
  CHECK(verdict_ok(qgal::census(curve(6), certs), "outer half-degree") == false);
  certs.assign(2, fake_cert(p, false, 7));
  CHECK(verdict_ok(qgal::census(curve(14), certs), "outer half-degree large d") == false);
  certs.assign(3, fake_cert(p, false, 7));
  CHECK(verdict_ok(qgal::census(curve(14), certs), "outer half-degree large d") == true);

  // Inner counts above the half-degree order on odd degrees.
  certs.assign(8, fake_cert(p, true, 3));
  CHECK(verdict_ok(qgal::census(curve(7), certs), "inner half-degree") == false);
  certs.assign(2, fake_cert(p, true, 7));
  CHECK(verdict_ok(qgal::census(curve(15), certs), "inner half-degree large d") == false);
}

TEST_CASE("fixed locus intersections on the curve") {
  const Fixture& cop = fixture("coprime_example");
  REQUIRE(cop.certs.size() == 2);
  std::vector<ProjPoint> meet =
      qgal::fixed_locus_intersection(cop.certs[0], cop.certs[1], cop.curve.form);
  REQUIRE(meet.size() == 2);
  CHECK(meet[0] == cop.certs[0].point);
  CHECK(meet[1] == cop.certs[1].point);

  const Fixture& kl = fixture("klein_model");
  QGCertificate a = qgal::quasi_galois_order(kl.curve.form, pt(kl.curve.ctx, "1", "0", "0"));
  QGCertificate b = qgal::quasi_galois_order(kl.curve.form, pt(kl.curve.ctx, "0", "1", "0"));
  CHECK(qgal::fixed_locus_intersection(a, b, kl.curve.form).empty());

  CHECK(throws_code(Errc::BAD_PARAMS,
                    [&] { qgal::fixed_locus_intersection(a, a, kl.curve.form); }));
  const Fixture& q = fixture("quartic_family", {{"a", "1"}, {"b", "0"}, {"c", "0"}});
  QGCertificate trivial = qgal::quasi_galois_order(q.curve.form, pt(q.curve.ctx, "1", "2", "3"));
  CHECK(throws_code(Errc::NOT_QUASI_GALOIS,
                    [&] { qgal::fixed_locus_intersection(a, trivial, q.curve.form); }));
}

TEST_CASE("closure bounds and group predictions") {
  qgal::ClosureBounds b24 = qgal::galois_closure_bounds(2, 4);
  CHECK(b24.lower == 4);
  CHECK(b24.upper_generic == 8);
  CHECK(b24.upper_symbolic == "R*2^2");

  qgal::ClosureBounds b36 = qgal::galois_closure_bounds(3, 6);
  CHECK(b36.lower == 6);
  CHECK(b36.upper_generic == 18);
  CHECK(b36.upper_symbolic == "R*3^2");

  CHECK(qgal::galois_closure_bounds(2, 2).lower == 2);
  CHECK(qgal::galois_closure_bounds(2, 2).upper_generic == 2);
  CHECK(qgal::galois_closure_bounds(2, 8).upper_generic == 24 * 16);

  CHECK(throws_code(Errc::NOT_DIVISIBLE, [] { qgal::galois_closure_bounds(3, 7); }));
  CHECK(throws_code(Errc::NOT_DIVISIBLE, [] { qgal::galois_closure_bounds(1, 4); }));
  CHECK(throws_code(Errc::BAD_PARAMS, [] { qgal::galois_closure_bounds(2, 60); }));

  qgal::GroupPrediction g36 = qgal::predicted_galois_group(3, 6);
  CHECK(g36.order == 18);
  CHECK(g36.label == "(Z/3Z) x D_6");
  qgal::GroupPrediction g24 = qgal::predicted_galois_group(2, 4);
  CHECK(g24.order == 8);
  CHECK(g24.label == "order only (8)");
  qgal::GroupPrediction g510 = qgal::predicted_galois_group(5, 10);
  CHECK(g510.order == 50);
  CHECK(g510.label == "(Z/5Z) x D_10");
  CHECK(qgal::predicted_galois_group(9, 18).order == 162);
  CHECK(qgal::predicted_galois_group(9, 18).label == "order only (162)");
  CHECK(throws_code(Errc::NOT_APPLICABLE, [] { qgal::predicted_galois_group(3, 7); }));
  CHECK(throws_code(Errc::BAD_PARAMS, [] { qgal::predicted_galois_group(1, 2); }));
}

TEST_CASE("dual certificates swap point and axis") {
  CtxPtr c4 = make_context(4);
  TriForm F4 = fermat(c4, 4);
  FieldElement one = FieldElement::one(c4);
  FieldElement zero = FieldElement::zero(c4);
  FieldElement i = num::zeta(c4, 4);
  QGCertificate vert = qgal::quasi_galois_order(F4, pt(c4, "1", "0", "0"));

  QGCertificate dual = qgal::dual_certificate(vert);
  CHECK(dual.point == ProjPoint(one, zero, zero));
  CHECK(*dual.axis == ProjLine({one, zero, zero}));
  CHECK(*dual.generator == ProjTransform(Mat3::diagonal(num::invert(i), one, one)));
  CHECK(dual.n == 4);
  CHECK(dual.r == 4);

  QGCertificate back = qgal::dual_certificate(dual);
  CHECK(back.point == vert.point);
  CHECK(*back.generator == *vert.generator);
  CHECK(*back.axis == *vert.axis);

  const Fixture& q = fixture("quartic_family", {{"a", "1"}, {"b", "0"}, {"c", "0"}});
  QGCertificate trivial = qgal::quasi_galois_order(q.curve.form, pt(q.curve.ctx, "1", "2", "3"));
  CHECK(throws_code(Errc::NOT_QUASI_GALOIS, [&] { qgal::dual_certificate(trivial); }));
}

TEST_CASE("property suites hold") {
  for (const PropertyResult& r : run_all_properties()) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.ok);
    // The randomized suite has a hard floor; the rest sweep the whole corpus.
    CHECK(r.instances >= (r.name == "standard form roundtrip" ? 50 : 1));
  }
}
