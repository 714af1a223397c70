#include "qg/qgal.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qg/ints.hpp"

namespace qg::qgal {

namespace {

using num::CtxPtr;
using num::Rational;
using plane::Mat3;
using plane::Vec3;

// f must use only Y and Z. Returns {min_j, max_j} over nonzero terms.
std::pair<long, long> y_range(const TriForm& f) {
  assert(!f.is_zero());
  long lo = f.degree(), hi = 0;
  for (const auto& [e, c] : f.terms()) {
    assert(e[0] == 0);
    lo = std::min(lo, e[1]);
    hi = std::max(hi, e[1]);
  }
  return {lo, hi};
}

FieldElement yz_coeff(const TriForm& f, long j) {
  if (j < 0 || j > f.degree()) return FieldElement::zero(f.context());
  return f.coeff({0, j, f.degree() - j});
}

Mat3 standard_homology(const FieldElement& z, const FieldElement& a, const FieldElement& b) {
  CtxPtr ctx = z.context();
  Mat3 m = Mat3::identity(ctx);
  m(0, 0) = z;
  m(0, 1) = a;
  m(0, 2) = b;
  return m;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::map<long, long> suffix_sums(const std::map<long, long>& tally) {
  std::map<long, long> cum;
  if (tally.empty()) return cum;
  long hi = tally.rbegin()->first;
  long run = 0;
  for (long n = hi; n >= 2; --n) {
    auto it = tally.find(n);
    if (it != tally.end()) run += it->second;
    cum[n] = run;
  }
  return cum;
}

long cum_at(const std::map<long, long>& cum, long n) {
  // counts with order >= n
  if (cum.empty()) return 0;
  auto it = cum.lower_bound(n);
  return it == cum.end() ? 0 : it->second;
}

std::string fmt(long v) { return std::to_string(v); }

}  // namespace

long CensusReport::inner_total() const {
  long s = 0;
  for (const auto& [n, c] : inner) s += c;
  return s;
}

long CensusReport::outer_total() const {
  long s = 0;
  for (const auto& [n, c] : outer) s += c;
  return s;
}

bool CensusReport::all_bounds_ok() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const BoundVerdict& v) { return v.ok; });
}

std::optional<std::pair<FieldElement, FieldElement>> solve_homology(const TriForm& Fp, long r,
                                                                    const FieldElement& z) {
  CtxPtr ctx = Fp.context();
  auto slices = poly::x_slices(Fp);
  if (slices.r != r || r < 2) throw Error(Errc::BAD_PARAMS, "solve_homology: deg_X mismatch");

  const TriForm& ar = slices.slices.at(r);  // X^r coefficient, in Y and Z
  FieldElement a = FieldElement::zero(ctx), b = FieldElement::zero(ctx);

  auto it_low = slices.slices.find(r - 1);
  if (it_low != slices.slices.end()) {
    // (aY + bZ) * ar = ((z - 1) / r) * a_{r-1}; leading and trailing
    // Y-coefficients of ar pin a and b, then the product is checked exactly.
    FieldElement scale = (z - FieldElement::one(ctx)) / FieldElement::from_rational(ctx, r);
    TriForm target = it_low->second.scaled(scale);
    if (!target.is_zero()) {
      auto [ylo, yhi] = y_range(ar);
      a = yz_coeff(target, yhi + 1) / yz_coeff(ar, yhi);
      b = yz_coeff(target, ylo) / yz_coeff(ar, ylo);
      TriForm lin =
          TriForm::monomial(ctx, {0, 1, 0}, a) + TriForm::monomial(ctx, {0, 0, 1}, b);
      if (!(lin * ar == target)) return std::nullopt;
    }
  }

  Mat3 A = standard_homology(z, a, b);
  TriForm lhs = poly::substitute_linear(Fp, A);
  if (!(lhs == Fp.scaled(z.pow(r)))) return std::nullopt;
  return std::make_pair(a, b);
}

QGCertificate quasi_galois_order(const TriForm& C, const ProjPoint& P) {
  CtxPtr ctx = C.context();
  CenteredForm cf = normalize_center(C, P);
  long r = plane::projection_degree(C, P);

  QGCertificate cert{P, plane::curve_contains(C, P), r, 1, std::nullopt, std::nullopt};

  std::vector<long> divs;
  for (long n : num::divisors(r))
    if (n >= 2) divs.push_back(n);

  // All roots must be available before any solve is attempted, so a missing
  // root is reported even when a larger divisor would have succeeded first.
  for (long n : divs) {
    try {
      (void)num::zeta(ctx, n);
    } catch (const RootsMissing&) {
      long need = std::lcm(ctx->conductor, r);
      if (need % 4 == 2) need /= 2;
      throw RootsMissing(n, need);
    }
  }

  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    long n = *it;
    FieldElement z = num::zeta(ctx, n);
    auto sol = solve_homology(cf.form, r, z);
    if (!sol) continue;

    Mat3 M = cf.M.matrix();
    Mat3 A = standard_homology(z, sol->first, sol->second);
    cert.n = n;
    cert.generator = ProjTransform(M.inverse() * A * M);
    FieldElement one = FieldElement::one(ctx);
    Vec3 axis_std = {z - one, sol->first, sol->second};
    cert.axis = ProjLine(M.transpose() * axis_std);
    break;
  }

  if (!verify_certificate(cert, C))
    throw std::logic_error("quasi_galois_order: certificate failed verification");
  return cert;
}

bool verify_certificate(const QGCertificate& c, const TriForm& C) {
  if (c.on_curve != plane::curve_contains(C, c.point)) return false;
  if (plane::projection_degree(C, c.point) != c.r) return false;

  if (c.n == 1) return !c.generator && !c.axis;

  if (c.n < 2 || c.r % c.n != 0) return false;
  if (!c.generator || !c.axis) return false;
  const ProjTransform& g = *c.generator;
  const ProjLine& ax = *c.axis;

  if (plane::projective_order(g, c.n + 1) != c.n) return false;
  if (!(g.apply(c.point) == c.point)) return false;
  if (ax.incident(c.point)) return false;
  if (!groups::transform_preserves_curve(g, C)) return false;

  // Pointwise fixing of a line: two independent points plus their sum.
  ProjPoint q1 = plane::second_point_on_line(ax, c.point);
  ProjPoint q2 = plane::second_point_on_line(ax, q1);
  Vec3 sum = {q1.coords()[0] + q2.coords()[0], q1.coords()[1] + q2.coords()[1],
              q1.coords()[2] + q2.coords()[2]};
  ProjPoint q3(sum);
  for (const ProjPoint& q : {q1, q2, q3}) {
    if (!ax.incident(q)) return false;
    if (!(g.apply(q) == q)) return false;
  }
  return true;
}

std::pair<ProjPoint, ProjLine> fixed_locus(const ProjTransform& sigma) {
  auto d = groups::homology_decomposition(sigma);
  if (d.kind != groups::HomologyDecomposition::Kind::Homology)
    throw Error(Errc::NOT_HOMOLOGY, "fixed_locus: transform is not a homology");
  return {*d.center, *d.axis};
}

GPairWitness is_gpair(const QGCertificate& c1, const QGCertificate& c2) {
  if (c1.n < 2 || c2.n < 2)
    throw Error(Errc::NOT_QUASI_GALOIS, "is_gpair: both orders must be at least 2");
  return GPairWitness{c1, c2, c1.generator->apply(c2.point) == c2.point,
                      c2.generator->apply(c1.point) == c1.point};
}

QGCertificate conjugate_certificate(const QGCertificate& c, const ProjTransform& tau,
                                    const TriForm& C) {
  if (!groups::transform_preserves_curve(tau, C))
    throw Error(Errc::NOT_AUTOMORPHISM, "conjugate_certificate: tau does not preserve the curve");
  ProjPoint moved = tau.apply(c.point);
  QGCertificate out{moved, plane::curve_contains(C, moved), plane::projection_degree(C, moved),
                    c.n, std::nullopt, std::nullopt};
  if (c.generator) out.generator = tau * *c.generator * tau.inverse();
  if (c.axis) out.axis = tau.apply(*c.axis);
  if (out.n >= 2 && !verify_certificate(out, C))
    throw std::logic_error("conjugate_certificate: conjugate failed verification");
  return out;
}

std::vector<QGCertificate> discover(const TriForm& C, const std::vector<ProjPoint>& seeds,
                                    long cap) {
  std::map<std::string, QGCertificate> known;
  std::set<std::string> rejected;

  auto harvest = [&] {
    std::vector<QGCertificate> out;
    out.reserve(known.size());
    for (const auto& [k, c] : known) out.push_back(c);
    return out;
  };

  auto add_point = [&](const ProjPoint& P) -> bool {
    std::string k = P.key();
    if (known.count(k) || rejected.count(k)) return false;
    QGCertificate c = quasi_galois_order(C, P);
    if (c.n < 2) {
      rejected.insert(k);
      return false;
    }
    if ((long)known.size() >= cap) throw DiscoverCapExceeded(harvest(), cap);
    known.emplace(std::move(k), std::move(c));
    return true;
  };

  for (const ProjPoint& s : seeds) add_point(s);

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<QGCertificate> gens = harvest();
    std::vector<ProjPoint> pts;
    pts.reserve(gens.size());
    for (const auto& c : gens) pts.push_back(c.point);
    for (const auto& gc : gens) {
      ProjTransform power = *gc.generator;
      for (long k = 1; k < gc.n; ++k) {
        for (const ProjPoint& q : pts)
          if (add_point(power.apply(q))) changed = true;
        power = power * *gc.generator;
      }
    }
  }
  return harvest();
}

CensusReport census(const TriForm& C, const std::vector<QGCertificate>& certs) {
  CensusReport rep;
  rep.degree = C.degree();
  const long d = rep.degree;

  for (const auto& c : certs) {
    if (c.n < 2) continue;
    (c.on_curve ? rep.inner : rep.outer)[c.n] += 1;
  }
  rep.inner_cumulative = suffix_sums(rep.inner);
  rep.outer_cumulative = suffix_sums(rep.outer);

  const long budget_inner = 3 * d * (d - 2);
  const long budget_outer = 3 * (d - 2);
  auto push = [&](std::string name, bool ok, std::string detail) {
    rep.verdicts.push_back({std::move(name), ok, std::move(detail)});
  };

  // Inner points whose orders share a prime divisor compete for the same
  // ramification budget 3d(d-2); weight n-1+d(n-2) per point of order n.
  std::set<long> primes;
  for (const auto& [n, cnt] : rep.inner)
    for (long p : prime_factors(n)) primes.insert(p);
  for (long p : primes) {
    long weighted = 0, count = 0, nmin = 0;
    for (const auto& [n, cnt] : rep.inner) {
      if (n % p != 0) continue;
      weighted += cnt * (n - 1 + d * (n - 2));
      count += cnt;
      if (nmin == 0) nmin = n;  // map iterates ascending
    }
    if (count == 0) continue;
    std::string cls = "inner class p=" + fmt(p);
    push(cls + " weighted", weighted <= budget_inner,
         fmt(weighted) + " <= " + fmt(budget_inner));
    long w1 = (nmin + 1) * (nmin - 1 + d * (nmin - 2));
    if (w1 > budget_inner)
      push(cls + " at most one", count <= 1, fmt(count) + " <= 1");
    long w2 = (nmin * nmin + nmin + 1) * (nmin - 1 + d * (nmin - 2));
    if (w2 > budget_inner)
      push(cls + " at most d", count <= d, fmt(count) + " <= " + fmt(d));
  }

  long outer_weighted = 0;
  long outer_max = rep.outer.empty() ? 0 : rep.outer.rbegin()->first;
  for (const auto& [n, cnt] : rep.outer)
    if (n >= 3) outer_weighted += cnt * (n - 2);
  push("outer weighted", outer_weighted <= budget_outer,
       fmt(outer_weighted) + " <= " + fmt(budget_outer));
  for (long n = 3; n <= outer_max; ++n) {
    if ((n + 1) * (n - 2) > budget_outer) {
      long have = cum_at(rep.outer_cumulative, n);
      push("outer tail n=" + fmt(n), have <= 3, fmt(have) + " <= 3");
    }
  }

  if (d >= 6 && d % 2 == 0) {
    long n = d / 2;
    long have = cum_at(rep.outer_cumulative, n);
    push("outer half-degree", have <= 12, fmt(have) + " <= 12");
    if (d >= 14)
      push("outer half-degree large d", have == 0 || have == 1 || have == 3,
           fmt(have) + " in {0,1,3}");
  }
  if (d == 4) {
    auto it = rep.outer.find(2);
    long have = it == rep.outer.end() ? 0 : it->second;
    push("outer quartic involutions", have <= 21, fmt(have) + " <= 21");
  }
  if (d >= 7 && d % 2 == 1) {
    long n = (d - 1) / 2;
    long have = cum_at(rep.inner_cumulative, n);
    push("inner half-degree", have <= d, fmt(have) + " <= " + fmt(d));
    if (d >= 15) push("inner half-degree large d", have <= 1, fmt(have) + " <= 1");
  }
  return rep;
}

std::vector<ProjPoint> fixed_locus_intersection(const QGCertificate& c1,
                                                const QGCertificate& c2, const TriForm& C) {
  if (c1.n < 2 || c2.n < 2)
    throw Error(Errc::NOT_QUASI_GALOIS, "fixed_locus_intersection: orders must be at least 2");
  if (c1.point == c2.point)
    throw Error(Errc::BAD_PARAMS, "fixed_locus_intersection: points coincide");
  const ProjLine& a1 = *c1.axis;
  const ProjLine& a2 = *c2.axis;
  if (a1 == a2)
    throw Error(Errc::BAD_PARAMS, "fixed_locus_intersection: shared axis, intersection not finite");

  std::set<ProjPoint> cand;
  cand.insert(plane::line_intersection(a1, a2));
  if (a2.incident(c1.point)) cand.insert(c1.point);
  if (a1.incident(c2.point)) cand.insert(c2.point);

  std::vector<ProjPoint> out;
  for (const ProjPoint& q : cand)
    if (plane::curve_contains(C, q)) out.push_back(q);
  return out;
}

ClosureBounds galois_closure_bounds(long n, long degree) {
  if (n < 2 || degree < n || degree % n != 0)
    throw Error(Errc::NOT_DIVISIBLE, "galois_closure_bounds: order must divide the degree");
  long rp = degree / n;
  if (rp > 20) throw Error(Errc::BAD_PARAMS, "galois_closure_bounds: residual degree too large");
  ClosureBounds b;
  b.lower = n * rp;
  long fact = 1;
  for (long k = 2; k <= rp; ++k) fact *= k;
  long pw = 1;
  for (long k = 0; k < rp; ++k) pw *= n;
  b.upper_generic = fact * pw;
  b.upper_symbolic = "R*" + fmt(n) + "^" + fmt(rp);
  return b;
}

GroupPrediction predicted_galois_group(long n, long degree) {
  if (n < 2) throw Error(Errc::BAD_PARAMS, "predicted_galois_group: order must be at least 2");
  if (degree != 2 * n)
    throw Error(Errc::NOT_APPLICABLE, "predicted_galois_group: degree must equal 2n");
  GroupPrediction g;
  g.order = 2 * n * n;
  if (n % 2 == 1 && is_prime(n))
    g.label = "(Z/" + fmt(n) + "Z) x D_" + fmt(2 * n);
  else
    g.label = "order only (" + fmt(g.order) + ")";
  return g;
}

QGCertificate dual_certificate(const QGCertificate& c) {
  if (c.n < 2)
    throw Error(Errc::NOT_QUASI_GALOIS, "dual_certificate: order must be at least 2");
  return QGCertificate{ProjPoint(c.axis->coords()), c.on_curve, c.r, c.n,
                       ProjTransform(c.generator->matrix().inverse_transpose()),
                       ProjLine(c.point.coords())};
}

}  // namespace qg::qgal
