#include "qg/geometry.hpp"

#include <algorithm>
#include <cassert>

#include "qg/subresultant.hpp"

namespace qg::plane {

namespace {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

bool curve_contains(const TriForm& C, const ProjPoint& P) {
  return C.evaluate(P.coords()).is_zero();
}

Vec3 gradient(const TriForm& C, const ProjPoint& P) {
  return {C.partial(0).evaluate(P.coords()), C.partial(1).evaluate(P.coords()),
          C.partial(2).evaluate(P.coords())};
}

ProjLine line_through(const ProjPoint& P, const ProjPoint& Q) {
  if (P == Q) throw Error(Errc::EQUAL_POINTS, "no unique line through a single point");
  return ProjLine(cross(P.coords(), Q.coords()));
}

ProjPoint line_intersection(const ProjLine& a, const ProjLine& b) {
  if (a == b) throw Error(Errc::EQUAL_POINTS, "lines coincide");
  return ProjPoint(cross(a.coords(), b.coords()));
}

ProjPoint second_point_on_line(const ProjLine& l, const ProjPoint& avoid) {
  const CtxPtr& ctx = avoid.context();
  for (int i = 0; i < 3; ++i) {
    Vec3 e = num::vec3_zero(ctx);
    e[static_cast<size_t>(i)] = FieldElement::one(ctx);
    Vec3 c = cross(l.coords(), e);
    if (num::vec3_is_zero(c)) continue;
    ProjPoint p(c);
    if (p != avoid) return p;
  }
  throw Error(Errc::BAD_PARAMS, "degenerate line");  // unreachable for valid lines
}

ProjLine tangent_line(const TriForm& C, const ProjPoint& Q) {
  if (!curve_contains(C, Q)) throw Error(Errc::NOT_ON_CURVE, "tangent needs a curve point");
  Vec3 g = gradient(C, Q);
  if (num::vec3_is_zero(g)) throw Error(Errc::SINGULAR_POINT, "gradient vanishes");
  return ProjLine(g);
}

long intersection_multiplicity(const TriForm& C, const ProjPoint& P0, const ProjPoint& P1,
                               const ProjPoint& Q) {
  ProjLine l = line_through(P0, P1);
  if (!l.incident(Q)) throw Error(Errc::NOT_INCIDENT, "point is not on the line");
  if (!curve_contains(C, Q)) throw Error(Errc::NOT_ON_CURVE, "multiplicity taken at a curve point");
  const ProjPoint& dir = Q != P1 ? P1 : P0;
  UniPoly g = poly::restrict_to_line(C, Q.coords(), dir.coords());
  return poly::vanishing_order(g, FieldElement::zero(C.context()));
}

CenteredForm normalize_center(const TriForm& C, const ProjPoint& P) {
  const CtxPtr& ctx = C.context();
  const Vec3& p = P.coords();
  int pivot = 0;
  while (p[static_cast<size_t>(pivot)].is_zero()) ++pivot;
  Mat3 perm = Mat3::identity(ctx);
  if (pivot != 0) {
    for (int j = 0; j < 3; ++j) std::swap(perm(0, j), perm(pivot, j));
  }
  Vec3 pp = perm * p;  // pp[0] = 1
  Mat3 shear = Mat3::identity(ctx);
  shear(1, 0) = -pp[1];
  shear(2, 0) = -pp[2];
  Mat3 m = shear * perm;
  return {ProjTransform(m), poly::substitute_linear(C, m.inverse())};
}

long projection_degree(const TriForm& C, const ProjPoint& P) {
  CenteredForm cf = normalize_center(C, P);
  long r = poly::x_slices(cf.form).r;
  if (r <= 1)
    throw Error(Errc::PROJECTION_DEGENERATE, "projection degree " + std::to_string(r));
  return r;
}

long ramification_index(const TriForm& C, const ProjPoint& P, const ProjPoint& Q) {
  if (P == Q) {
    ProjLine t = tangent_line(C, P);
    ProjPoint s = second_point_on_line(t, P);
    return intersection_multiplicity(C, P, s, P) - 1;
  }
  return intersection_multiplicity(C, Q, P, Q);
}

long flex_contribution(const TriForm& C, const ProjPoint& Q) {
  ProjLine t = tangent_line(C, Q);
  ProjPoint s = second_point_on_line(t, Q);
  return intersection_multiplicity(C, Q, s, Q) - 2;
}

namespace {

long legendre(long k, long p) {
  // k^((p-1)/2) mod p for odd prime p
  long e = (p - 1) / 2, base = ((k % p) + p) % p, acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return acc == p - 1 ? -1 : acc;
}

struct PrimeRoot {
  FieldElement value;
  bool negated;  // value^2 = -p instead of p
};

std::optional<PrimeRoot> sqrt_of_prime(const CtxPtr& ctx, long p) {
  try {
    if (p == 2) {
      FieldElement z8 = num::zeta(ctx, 8);
      return PrimeRoot{z8 + z8.pow(7), false};
    }
    FieldElement zp = num::zeta(ctx, p);
    FieldElement g = FieldElement::zero(ctx);
    for (long k = 1; k < p; ++k) {
      FieldElement t = zp.pow(k);
      g += legendre(k, p) == 1 ? t : -t;
    }
    // g^2 = p for p = 1 mod 4, -p for p = 3 mod 4
    if (p % 4 == 1) return PrimeRoot{g, false};
    try {
      return PrimeRoot{g / num::zeta(ctx, 4), false};
    } catch (const RootsMissing&) {
      return PrimeRoot{g, true};  // keep the raw Gauss sum when zeta_4 is out
    }
  } catch (const RootsMissing&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<FieldElement> sqrt_of_rational(const CtxPtr& ctx, const num::Rational& q) {
  if (q == 0) return FieldElement::zero(ctx);
  bool negative = q < 0;
  // sqrt(a/b) = sqrt(|a| b) / b
  mpz_class den = q.get_den();
  mpz_class m = abs(q.get_num()) * den;
  mpz_class outside = 1;
  std::vector<long> core;
  auto strip = [&](long p) {
    long e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (long i = 0; i < e / 2; ++i) outside *= p;
    if (e % 2 == 1) core.push_back(p);
  };
  strip(2);
  for (long p = 3; p <= 1000000 && mpz_class(p) * p <= m; p += 2) strip(p);
  if (m > 1) {
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
      outside *= r;
    } else if (m.fits_slong_p() && mpz_probab_prime_p(m.get_mpz_t(), 30)) {
      core.push_back(m.get_si());
    } else {
      return std::nullopt;
    }
  }
  num::Rational ratio(outside, den);
  ratio.canonicalize();
  FieldElement res = FieldElement::from_rational(ctx, ratio);
  for (long p : core) {
    auto s = sqrt_of_prime(ctx, p);
    if (!s) return std::nullopt;
    res *= s->value;
    if (s->negated) negative = !negative;  // two raw Gauss sums cancel signs
  }
  if (negative) {
    try {
      res *= num::zeta(ctx, 4);
    } catch (const RootsMissing&) {
      return std::nullopt;
    }
  }
  if (res * res != FieldElement::from_rational(ctx, q)) return std::nullopt;
  return res;
}

namespace {

// All roots in the context field, or nullopt when extraction is out of scope
// (degree > 2, or a quadratic with an unusable discriminant).
std::optional<std::vector<FieldElement>> roots_of(const UniPoly& g) {
  const CtxPtr& ctx = g.context();
  if (g.degree() <= 0) return std::vector<FieldElement>{};
  UniPoly m = g.monic();
  UniPoly rep = poly::poly_gcd(m, m.derivative());
  if (rep.degree() >= 1) m = m.divmod(rep).first.monic();  // same root set
  if (m.degree() == 1) return std::vector<FieldElement>{-m.coeff(0)};
  if (m.degree() == 2) {
    FieldElement b = m.coeff(1), c = m.coeff(0);
    FieldElement disc = b * b - FieldElement::from_rational(ctx, num::Rational(4)) * c;
    FieldElement half = FieldElement::from_rational(ctx, num::Rational(1, 2));
    if (disc.is_zero()) return std::vector<FieldElement>{-b * half};
    if (!disc.is_rational()) return std::nullopt;
    auto s = sqrt_of_rational(ctx, disc.as_rational());
    if (!s) return std::nullopt;
    return std::vector<FieldElement>{(-b + *s) * half, (-b - *s) * half};
  }
  return std::nullopt;
}

struct YPolyOps {
  using Elem = UniPoly;
  CtxPtr ctx;
  Elem zero() const { return UniPoly::zero(ctx); }
  Elem one() const { return UniPoly::constant(FieldElement::one(ctx)); }
  bool is_zero(const Elem& e) const { return e.is_zero(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem exact_div(const Elem& a, const Elem& b) const {
    auto [q, r] = a.divmod(b);
    assert(r.is_zero());
    return q;
  }
};

// x-degree indexed vector of y-polynomials.
using BiPoly = std::vector<UniPoly>;

BiPoly dehomogenize_z(const TriForm& F) {
  const CtxPtr& ctx = F.context();
  long dx = 0;
  for (const auto& [e, c] : F.terms()) dx = std::max(dx, e[0]);
  std::vector<std::vector<FieldElement>> cols(static_cast<size_t>(dx) + 1);
  for (const auto& [e, c] : F.terms()) {
    auto& col = cols[static_cast<size_t>(e[0])];
    if (static_cast<long>(col.size()) <= e[1])
      col.resize(static_cast<size_t>(e[1]) + 1, FieldElement::zero(ctx));
    col[static_cast<size_t>(e[1])] += c;
  }
  BiPoly out;
  out.reserve(cols.size());
  for (auto& col : cols) out.emplace_back(ctx, std::move(col));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

bool bipoly_zero(const BiPoly& f) { return f.empty(); }

bool bipoly_nonzero_constant(const BiPoly& f) {
  return f.size() == 1 && f[0].degree() == 0;
}

long bipoly_xdeg(const BiPoly& f) { return static_cast<long>(f.size()) - 1; }

UniPoly specialize_y(const BiPoly& f, const FieldElement& y0) {
  const CtxPtr& ctx = y0.context();
  std::vector<FieldElement> c;
  c.reserve(f.size());
  for (const auto& p : f) c.push_back(p.evaluate(y0));
  return UniPoly(ctx, std::move(c));
}

// Restriction of F to the line Z = 0 with Y = 1, as a polynomial in x.
UniPoly restrict_z0(const TriForm& F) {
  const CtxPtr& ctx = F.context();
  std::vector<FieldElement> c;
  for (const auto& [e, v] : F.terms()) {
    if (e[2] != 0) continue;
    if (static_cast<long>(c.size()) <= e[0])
      c.resize(static_cast<size_t>(e[0]) + 1, FieldElement::zero(ctx));
    c[static_cast<size_t>(e[0])] += v;
  }
  return UniPoly(ctx, std::move(c));
}

bool gradient_vanishes(const std::array<TriForm, 3>& parts, const Vec3& p) {
  for (const auto& f : parts)
    if (!f.evaluate(p).is_zero()) return false;
  return true;
}

}  // namespace

SmoothnessResult is_smooth(const TriForm& C) {
  const CtxPtr& ctx = C.context();
  if (C.degree() < 1 || C.is_zero()) throw Error(Errc::BAD_PARAMS, "smoothness needs a nonzero form");
  std::array<TriForm, 3> parts = {C.partial(0), C.partial(1), C.partial(2)};
  FieldElement one = FieldElement::one(ctx), zero = FieldElement::zero(ctx);

  // the single point with Y = Z = 0
  Vec3 vertex = {one, zero, zero};
  if (gradient_vanishes(parts, vertex))
    return {SmoothnessResult::Kind::Singular, ProjPoint(vertex)};

  // stratum Z = 0, Y = 1: univariate restrictions in x
  {
    std::vector<UniPoly> restr;
    for (const auto& f : parts) {
      UniPoly u = restrict_z0(f);
      if (!u.is_zero()) restr.push_back(std::move(u));
    }
    if (restr.empty()) return {SmoothnessResult::Kind::Unknown, std::nullopt};
    UniPoly g = restr[0];
    for (size_t i = 1; i < restr.size(); ++i) g = poly::poly_gcd(g, restr[i]);
    if (g.degree() >= 1) {
      auto roots = roots_of(g);
      if (!roots) return {SmoothnessResult::Kind::Unknown, std::nullopt};
      for (const auto& x0 : *roots) {
        Vec3 p = {x0, one, zero};
        if (gradient_vanishes(parts, p))
          return {SmoothnessResult::Kind::Singular, ProjPoint(p)};
      }
    }
  }

  // chart Z = 1: eliminate x by pairwise subresultants, constrain y
  {
    std::vector<BiPoly> dehom;
    for (const auto& f : parts) dehom.push_back(dehomogenize_z(f));
    for (const auto& f : dehom)
      if (bipoly_nonzero_constant(f)) return {SmoothnessResult::Kind::Smooth, std::nullopt};
    std::vector<UniPoly> pool;
    std::vector<const BiPoly*> xpos;
    for (const auto& f : dehom) {
      if (bipoly_zero(f)) continue;
      if (bipoly_xdeg(f) == 0)
        pool.push_back(f[0]);
      else
        xpos.push_back(&f);
    }
    YPolyOps ops{ctx};
    for (size_t i = 0; i < xpos.size(); ++i)
      for (size_t j = i + 1; j < xpos.size(); ++j) {
        UniPoly r = poly::subresultant_resultant(ops, *xpos[i], *xpos[j]);
        if (!r.is_zero()) pool.push_back(std::move(r));
      }
    if (pool.empty()) return {SmoothnessResult::Kind::Unknown, std::nullopt};
    UniPoly G = pool[0];
    for (size_t i = 1; i < pool.size(); ++i) G = poly::poly_gcd(G, pool[i]);
    if (G.degree() >= 1) {
      auto ys = roots_of(G);
      if (!ys) return {SmoothnessResult::Kind::Unknown, std::nullopt};
      for (const auto& y0 : *ys) {
        std::vector<UniPoly> specialized;
        bool all_zero = true;
        for (const auto& f : dehom) {
          if (bipoly_zero(f)) continue;
          UniPoly s = specialize_y(f, y0);
          if (!s.is_zero()) {
            all_zero = false;
            specialized.push_back(std::move(s));
          }
        }
        if (all_zero) return {SmoothnessResult::Kind::Unknown, std::nullopt};
        UniPoly gx = specialized[0];
        for (size_t i = 1; i < specialized.size(); ++i) gx = poly::poly_gcd(gx, specialized[i]);
        if (gx.degree() < 1) continue;  // spurious y0 from a leading-term drop
        auto xs = roots_of(gx);
        if (!xs) return {SmoothnessResult::Kind::Unknown, std::nullopt};
        for (const auto& x0 : *xs) {
          Vec3 p = {x0, y0, one};
          if (gradient_vanishes(parts, p))
            return {SmoothnessResult::Kind::Singular, ProjPoint(p)};
        }
      }
    }
  }

  return {SmoothnessResult::Kind::Smooth, std::nullopt};
}

}  // namespace qg::plane
