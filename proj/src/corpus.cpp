#include "qg/corpus.hpp"

#include <numeric>
#include <stdexcept>

#include "qg/expr.hpp"
#include "qg/groups.hpp"

namespace qg::corpus {

namespace {

using num::Rational;
using plane::Mat3;
using plane::Vec3;
using poly::Exponents;

long get_long(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw Error(Errc::BAD_PARAMS, "missing parameter '" + key + "'");
  try {
    size_t pos = 0;
    long v = std::stol(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::BAD_PARAMS, "parameter '" + key + "' is not an integer: " + it->second);
  }
}

FieldElement get_coeff(const Params& p, const std::string& key, const CtxPtr& ctx,
                       const char* fallback) {
  auto it = p.find(key);
  std::string text = it == p.end() ? (fallback ? fallback : "") : it->second;
  if (text.empty()) throw Error(Errc::BAD_PARAMS, "missing parameter '" + key + "'");
  return num::parse_element(ctx, text);
}

TriForm make_form(const CtxPtr& ctx, long degree,
                  const std::vector<std::pair<Exponents, FieldElement>>& terms) {
  std::map<Exponents, FieldElement> m;
  for (const auto& [e, c] : terms) {
    if (c.is_zero()) continue;
    auto [it, fresh] = m.emplace(e, c);
    if (!fresh) it->second = it->second + c;
  }
  return TriForm(ctx, degree, std::move(m));
}

ProjPoint rat_point(const CtxPtr& ctx, long x, long y, long z) {
  auto f = [&](long v) { return FieldElement::from_rational(ctx, v); };
  return ProjPoint(f(x), f(y), f(z));
}

qgal::CensusReport tallies(long degree, std::map<long, long> inner, std::map<long, long> outer) {
  qgal::CensusReport r;
  r.degree = degree;
  r.inner = std::move(inner);
  r.outer = std::move(outer);
  return r;
}

long binom(long n, long k) {
  long b = 1;
  for (long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

struct KleinData {
  CtxPtr ctx;
  FieldElement a;
  FieldElement lambda;
};

// g = sum of chi(k) zeta_7^k with chi the quadratic character mod 7;
// g^2 = -7, a = (-3+3g)/2 solves a^2+3a+18 = 0 and 4a/(6-a) = lambda^2.
KleinData klein_data() {
  CtxPtr ctx = num::make_context(28);
  FieldElement z7 = num::zeta(ctx, 7);
  FieldElement g = FieldElement::zero(ctx);
  for (long k = 1; k <= 6; ++k) {
    FieldElement t = z7.pow(k);
    bool square = (k == 1 || k == 2 || k == 4);
    g = square ? g + t : g - t;
  }
  auto rat = [&](long v) { return FieldElement::from_rational(ctx, v); };
  if (!(g * g == rat(-7))) throw std::logic_error("klein_model: Gauss sum square mismatch");
  FieldElement a = (rat(-3) + rat(3) * g) / rat(2);
  if (!(a * a + rat(3) * a + rat(18)).is_zero())
    throw std::logic_error("klein_model: coefficient identity failed");
  FieldElement lambda = (rat(3) * (rat(3) + g)) / (rat(6) - a);
  if (!(lambda * lambda == rat(4) * a / (rat(6) - a)))
    throw std::logic_error("klein_model: lambda identity failed");
  return {ctx, a, lambda};
}

TriForm quartic_form(const CtxPtr& ctx, const FieldElement& a, const FieldElement& b,
                     const FieldElement& c) {
  FieldElement one = FieldElement::one(ctx);
  return make_form(ctx, 4,
                   {{{4, 0, 0}, one},
                    {{0, 4, 0}, one},
                    {{0, 0, 4}, one},
                    {{2, 2, 0}, a},
                    {{0, 2, 2}, b},
                    {{2, 0, 2}, c}});
}

std::vector<ProjPoint> fermat_seeds(const CtxPtr& ctx, long d) {
  std::vector<ProjPoint> seeds = {rat_point(ctx, 1, 0, 0), rat_point(ctx, 0, 1, 0),
                                  rat_point(ctx, 0, 0, 1)};
  FieldElement zero = FieldElement::zero(ctx);
  FieldElement one = FieldElement::one(ctx);
  std::vector<FieldElement> roots;
  if (d % 2 == 0) {
    FieldElement z = num::zeta(ctx, d);
    for (long k = 0; k < d; ++k) roots.push_back(z.pow(k));
  } else {
    // the d solutions of c^d = -1, all in the conductor field
    FieldElement z = num::zeta(ctx, 2 * d);
    for (long k = 0; k < d; ++k) roots.push_back(z.pow(2 * k + 1));
  }
  for (const FieldElement& c : roots) {
    seeds.emplace_back(c, zero, one);
    seeds.emplace_back(zero, c, one);
    seeds.emplace_back(c, one, zero);
  }
  return seeds;
}

NamedCurve build_fermat(const Params& params) {
  long d = get_long(params, "d");
  if (d < 4) throw Error(Errc::BAD_PARAMS, "fermat: degree must be at least 4");
  long N = d % 2 == 0 ? d : std::lcm(2 * d, d - 1);
  CtxPtr ctx = num::make_context(N);
  FieldElement one = FieldElement::one(ctx);
  TriForm F = make_form(ctx, d, {{{d, 0, 0}, one}, {{0, d, 0}, one}, {{0, 0, d}, one}});
  std::map<long, long> inner, outer;
  outer[d] = 3;
  (d % 2 == 0 ? outer : inner)[2] = 3 * d;
  NamedCurve c{"fermat", "fermat(" + std::to_string(d) + ")", ctx, F, fermat_seeds(ctx, d),
               tallies(d, inner, outer), std::nullopt};
  if (d == 4) c.expected_group_order = 96;
  return c;
}

NamedCurve build_hessian() {
  CtxPtr ctx = num::make_context(3);
  FieldElement one = FieldElement::one(ctx);
  FieldElement m10 = FieldElement::from_rational(ctx, -10);
  TriForm F = make_form(ctx, 6,
                        {{{6, 0, 0}, one},
                         {{0, 6, 0}, one},
                         {{0, 0, 6}, one},
                         {{3, 3, 0}, m10},
                         {{0, 3, 3}, m10},
                         {{3, 0, 3}, m10}});
  std::vector<ProjPoint> seeds = {rat_point(ctx, 1, 0, 0), rat_point(ctx, 0, 1, 0),
                                  rat_point(ctx, 0, 0, 1), rat_point(ctx, 1, 1, 1)};
  return {"hessian_sextic", "hessian_sextic", ctx, F, seeds, tallies(6, {}, {{3, 12}}), 216};
}

NamedCurve build_klein() {
  KleinData kd = klein_data();
  const CtxPtr& ctx = kd.ctx;
  TriForm F = quartic_form(ctx, kd.a, kd.a, kd.a);

  FieldElement one = FieldElement::one(ctx);
  FieldElement two = FieldElement::from_rational(ctx, 2);
  FieldElement tl = two / kd.lambda;
  Mat3 tau = Mat3::zero(ctx);
  tau(0, 1) = tl;
  tau(0, 2) = -tl;
  tau(1, 0) = kd.lambda;
  tau(1, 1) = one;
  tau(1, 2) = one;
  tau(2, 0) = -kd.lambda;
  tau(2, 1) = one;
  tau(2, 2) = one;
  auto dec = groups::homology_decomposition(plane::ProjTransform(tau));
  if (dec.kind != groups::HomologyDecomposition::Kind::Homology)
    throw std::logic_error("klein_model: tau is not a homology");

  std::vector<ProjPoint> seeds;
  for (auto [x, y, z] : {std::array<long, 3>{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},
                         {1, -1, 0}, {0, 1, 1}, {0, 1, -1}, {1, 0, 1}, {1, 0, -1}})
    seeds.push_back(rat_point(ctx, x, y, z));
  seeds.push_back(*dec.center);
  return {"klein_model", "klein_model", ctx, F, seeds, tallies(4, {}, {{2, 21}}), 168};
}

NamedCurve build_quartic(const Params& params) {
  CtxPtr ctx = num::make_context(4);
  FieldElement a = get_coeff(params, "a", ctx, nullptr);
  FieldElement b = get_coeff(params, "b", ctx, nullptr);
  FieldElement c = get_coeff(params, "c", ctx, nullptr);
  TriForm F = quartic_form(ctx, a, b, c);
  FieldElement zero = FieldElement::zero(ctx);
  FieldElement one = FieldElement::one(ctx);
  FieldElement i = num::zeta(ctx, 4);
  std::vector<ProjPoint> seeds = {rat_point(ctx, 1, 0, 0),     rat_point(ctx, 0, 1, 0),
                                  rat_point(ctx, 1, 1, 0),     rat_point(ctx, 1, -1, 0),
                                  ProjPoint(i, one, zero),     ProjPoint(-i, one, zero)};
  std::string disp = "quartic_family(" + a.str() + "," + b.str() + "," + c.str() + ")";
  return {"quartic_family", disp, ctx, F, seeds, std::nullopt, std::nullopt};
}

NamedCurve build_halfdeg(const Params& params) {
  long n = get_long(params, "n");
  if (n < 2) throw Error(Errc::BAD_PARAMS, "halfdeg_family: n must be at least 2");
  CtxPtr ctx = num::make_context(2 * n);
  FieldElement a = get_coeff(params, "a", ctx, "1");
  FieldElement b = get_coeff(params, "b", ctx, "1");
  FieldElement c = get_coeff(params, "c", ctx, "1");
  FieldElement one = FieldElement::one(ctx);
  TriForm F = make_form(ctx, 2 * n,
                        {{{2 * n, 0, 0}, one},
                         {{0, 2 * n, 0}, one},
                         {{0, 0, 2 * n}, one},
                         {{n, n, 0}, a},
                         {{0, n, n}, b},
                         {{n, 0, n}, c}});
  std::vector<ProjPoint> seeds = {rat_point(ctx, 1, 0, 0), rat_point(ctx, 0, 1, 0),
                                  rat_point(ctx, 0, 0, 1)};
  std::string disp = "halfdeg_family(" + std::to_string(n) + "," + a.str() + "," + b.str() +
                     "," + c.str() + ")";
  return {"halfdeg_family", disp, ctx, F, seeds, std::nullopt, std::nullopt};
}

NamedCurve build_coprime() {
  CtxPtr ctx = num::make_context(6);
  FieldElement one = FieldElement::one(ctx);
  TriForm F = make_form(
      ctx, 7, {{{6, 0, 1}, one}, {{3, 4, 0}, one}, {{0, 6, 1}, one}, {{0, 0, 7}, one}});
  std::vector<ProjPoint> seeds = {rat_point(ctx, 1, 0, 0), rat_point(ctx, 0, 1, 0)};
  return {"coprime_example", "coprime_example", ctx, F, seeds, std::nullopt, std::nullopt};
}

NamedCurve build_miura(const Params& params) {
  long n = get_long(params, "n");
  if (n < 1) throw Error(Errc::BAD_PARAMS, "miura_example: n must be at least 1");
  CtxPtr ctx = num::make_context(2 * n);
  FieldElement one = FieldElement::one(ctx);
  std::vector<std::pair<Exponents, FieldElement>> terms;
  // Y (X^2 + Y^2)^n expanded binomially
  for (long k = 0; k <= n; ++k)
    terms.push_back({{2 * k, 2 * (n - k) + 1, 0}, FieldElement::from_rational(ctx, binom(n, k))});
  terms.push_back({{n + 1, 0, n}, one});
  terms.push_back({{0, n + 1, n}, one});
  terms.push_back({{0, 1, 2 * n}, one});
  TriForm F = make_form(ctx, 2 * n + 1, terms);
  std::vector<ProjPoint> seeds = {rat_point(ctx, 0, 0, 1)};
  return {"miura_example", "miura_example(" + std::to_string(n) + ")", ctx, F, seeds,
          std::nullopt, std::nullopt};
}

}  // namespace

NamedCurve build_curve(const std::string& name, const Params& params) {
  if (name == "fermat") return build_fermat(params);
  if (name == "hessian_sextic") return build_hessian();
  if (name == "klein_model") return build_klein();
  if (name == "quartic_family") return build_quartic(params);
  if (name == "halfdeg_family") return build_halfdeg(params);
  if (name == "coprime_example") return build_coprime();
  if (name == "miura_example") return build_miura(params);
  throw Error(Errc::UNKNOWN_NAME, "unknown curve family: " + name);
}

qgal::CensusReport expected_census(const std::string& name, const Params& params) {
  NamedCurve c = build_curve(name, params);
  if (!c.expected)
    throw Error(Errc::NO_EXPECTATION, "no complete census for family: " + name);
  return *c.expected;
}

std::vector<ProjPoint> seed_points(const std::string& name, const Params& params) {
  return build_curve(name, params).seeds;
}

std::vector<std::string> family_names() {
  return {"fermat",         "hessian_sextic", "klein_model",  "quartic_family",
          "halfdeg_family", "coprime_example", "miura_example"};
}

}  // namespace qg::corpus
