#include "qg/groups.hpp"

#include <algorithm>
#include <deque>

#include "qg/unipoly.hpp"

namespace qg::groups {

bool MatrixGroup::contains(const ProjTransform& t) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), t);
  return it != elements.end() && *it == t;
}

bool MatrixGroup::same_elements(const MatrixGroup& other) const {
  return elements == other.elements;  // both sorted by key
}

MatrixGroup closure(const std::vector<ProjTransform>& generators, long cap) {
  if (generators.empty()) throw Error(Errc::BAD_PARAMS, "closure needs at least one generator");
  if (cap < 1) throw Error(Errc::BAD_PARAMS, "cap must be positive");
  const num::CtxPtr& ctx = generators[0].context();
  std::map<std::string, ProjTransform> seen;
  std::deque<ProjTransform> work;
  ProjTransform id = ProjTransform::identity(ctx);
  seen.emplace(id.key(), id);
  work.push_back(id);
  auto partial = [&]() {
    MatrixGroup g;
    g.generators = generators;
    for (const auto& [k, t] : seen) g.elements.push_back(t);
    return g;
  };
  while (!work.empty()) {
    ProjTransform cur = work.front();
    work.pop_front();
    for (const auto& gen : generators) {
      ProjTransform next = cur * gen;
      auto [it, inserted] = seen.emplace(next.key(), next);
      if (!inserted) continue;
      if (static_cast<long>(seen.size()) > cap) throw ClosureCapExceeded(partial(), cap);
      work.push_back(next);
    }
  }
  return partial();
}

bool transform_preserves_curve(const ProjTransform& t, const TriForm& C) {
  return C.proportional_to(poly::substitute_linear(C, t.matrix()));
}

bool preserves_curve(const MatrixGroup& G, const TriForm& C) {
  for (const auto& t : G.elements)
    if (!transform_preserves_curve(t, C)) return false;
  return true;
}

namespace {

poly::UniPoly char_poly(const num::Mat3& m) {
  const num::CtxPtr& ctx = m.context();
  FieldElement tr = m.trace();
  FieldElement c2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) -
                    m(0, 2) * m(2, 0) + m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  return poly::UniPoly(ctx, {-m.det(), c2, -tr, FieldElement::one(ctx)});
}

ProjLine row_line(const num::Mat3& m) {
  for (int i = 0; i < 3; ++i) {
    num::Vec3 row = {m(i, 0), m(i, 1), m(i, 2)};
    if (!num::vec3_is_zero(row)) return ProjLine(row);
  }
  throw Error(Errc::BAD_PARAMS, "zero matrix has no row line");
}

ProjPoint column_point(const num::Mat3& m) {
  for (int j = 0; j < 3; ++j) {
    num::Vec3 col = {m(0, j), m(1, j), m(2, j)};
    if (!num::vec3_is_zero(col)) return ProjPoint(col);
  }
  throw Error(Errc::BAD_PARAMS, "zero matrix has no column point");
}

}  // namespace

HomologyDecomposition homology_decomposition(const ProjTransform& g) {
  const num::CtxPtr& ctx = g.context();
  const num::Mat3& A = g.matrix();
  if (g.is_identity()) return {HomologyDecomposition::Kind::Identity, {}, {}, {}};
  poly::UniPoly p = char_poly(A);
  poly::UniPoly gcd = poly::poly_gcd(p, p.derivative());
  if (gcd.degree() == 0) return {HomologyDecomposition::Kind::NotCentral, {}, {}, {}};

  FieldElement third = FieldElement::from_rational(ctx, num::Rational(1, 3));
  if (gcd.degree() == 2) {
    // triple eigenvalue; always in the field via the trace
    FieldElement lam = A.trace() * third;
    num::Mat3 B = A - num::Mat3::identity(ctx).scaled(lam);
    auto ker = num::kernel(B);
    if (ker.size() == 3) return {HomologyDecomposition::Kind::Identity, {}, {}, {}};
    if (ker.size() != 2) return {HomologyDecomposition::Kind::NotCentral, {}, {}, {}};
    return {HomologyDecomposition::Kind::Elation, column_point(B), row_line(B), {}};
  }

  // linear gcd: one double eigenvalue lam2 and one simple lam1
  FieldElement lam2 = -gcd.monic().coeff(0);
  FieldElement lam1 = A.trace() - lam2 - lam2;
  num::Mat3 B2 = A - num::Mat3::identity(ctx).scaled(lam2);
  auto ker2 = num::kernel(B2);
  if (ker2.size() != 2) return {HomologyDecomposition::Kind::NotCentral, {}, {}, {}};
  num::Mat3 B1 = A - num::Mat3::identity(ctx).scaled(lam1);
  auto ker1 = num::kernel(B1);
  if (ker1.size() != 1) return {HomologyDecomposition::Kind::NotCentral, {}, {}, {}};
  return {HomologyDecomposition::Kind::Homology, ProjPoint(ker1[0]), row_line(B2), lam1 / lam2};
}

bool is_normal_subgroup(const MatrixGroup& H, const MatrixGroup& G) {
  for (const auto& h : H.elements)
    if (!G.contains(h)) throw Error(Errc::NOT_SUBGROUP, "H is not contained in G");
  // conjugation by generators extends multiplicatively to all of G
  for (const auto& g : G.generators) {
    ProjTransform gi = g.inverse();
    for (const auto& h : H.elements)
      if (!H.contains(g * h * gi)) return false;
  }
  return true;
}

GroupReport group_report(const MatrixGroup& G) {
  GroupReport r;
  r.order = G.order();
  r.generator_count = static_cast<long>(G.generators.size());
  std::vector<ProjPoint> centers;
  for (const auto& t : G.elements) {
    long o = plane::projective_order(t, r.order + 1);
    ++r.element_order_histogram[o];
    auto dec = homology_decomposition(t);
    if (dec.kind == HomologyDecomposition::Kind::Homology) centers.push_back(*dec.center);
  }
  auto it = r.element_order_histogram.find(2);
  r.involution_count = it == r.element_order_histogram.end() ? 0 : it->second;
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  r.homology_centers = std::move(centers);
  return r;
}

}  // namespace qg::groups
