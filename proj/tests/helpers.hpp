#pragma once

// Shared test utilities: deterministic RNG samplers over the exact field
// types and a per-process cache of corpus curves with their discovery runs.

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qg/corpus.hpp"
#include "qg/expr.hpp"
#include "qg/qgal.hpp"

namespace testutil {

using qg::Errc;
using qg::num::CtxPtr;
using qg::num::FieldElement;
using qg::num::Mat3;
using qg::num::Rational;
using qg::num::Vec3;
using qg::plane::ProjPoint;
using qg::poly::Exponents;
using qg::poly::TriForm;

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Small magnitudes keep GMP words short; denominators 1 or 2 exercise the
// non-integral paths without blowing up reduction chains.
inline Rational rand_rational(Rng& rng, bool allow_zero = true) {
  long num = rand_int(rng, allow_zero ? -3 : 1, 3);
  if (!allow_zero && num == 0) num = 1;
  long den = rand_int(rng, 0, 3) == 0 ? 2 : 1;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline FieldElement rand_element(const CtxPtr& ctx, Rng& rng, int max_terms = 2) {
  std::vector<Rational> u(static_cast<size_t>(ctx->degree), Rational(0));
  int k = static_cast<int>(rand_int(rng, 0, max_terms));
  for (int i = 0; i < k; ++i)
    u[static_cast<size_t>(rand_int(rng, 0, ctx->degree - 1))] = rand_rational(rng);
  u[0] += rand_rational(rng);
  return FieldElement::from_parts(ctx, u, {});
}

inline FieldElement rand_nonzero(const CtxPtr& ctx, Rng& rng, int max_terms = 2) {
  for (;;) {
    FieldElement e = rand_element(ctx, rng, max_terms);
    if (!e.is_zero()) return e;
  }
}

inline Vec3 rand_vec3(const CtxPtr& ctx, Rng& rng) {
  for (;;) {
    Vec3 v = {rand_element(ctx, rng), rand_element(ctx, rng), rand_element(ctx, rng)};
    if (!qg::num::vec3_is_zero(v)) return v;
  }
}

inline ProjPoint rand_point(const CtxPtr& ctx, Rng& rng) { return ProjPoint(rand_vec3(ctx, rng)); }

inline Mat3 rand_invertible(const CtxPtr& ctx, Rng& rng) {
  for (;;) {
    Mat3 m = Mat3::zero(ctx);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = rand_element(ctx, rng, 1);
    if (!m.det().is_zero()) return m;
  }
}

// Dense-ish random form; never the zero form.
inline TriForm rand_form(const CtxPtr& ctx, Rng& rng, long degree, int terms) {
  std::map<Exponents, FieldElement> t;
  for (int k = 0; k < terms; ++k) {
    long i = rand_int(rng, 0, degree);
    long j = rand_int(rng, 0, degree - i);
    FieldElement c = rand_element(ctx, rng);
    if (c.is_zero()) continue;
    Exponents e = {i, j, degree - i - j};
    auto [it, fresh] = t.emplace(e, c);
    if (!fresh) it->second += c;
  }
  TriForm f(ctx, degree, std::move(t));
  if (f.is_zero()) return TriForm::monomial(ctx, {degree, 0, 0}, FieldElement::one(ctx));
  return f;
}

// True when fn throws qg::Error with exactly the given code.
inline bool throws_code(Errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const qg::Error& e) {
    return e.code() == code;
  } catch (...) {
    return false;
  }
  return false;
}

// Corpus curve plus its discovery run from the embedded seeds.
struct Fixture {
  qg::corpus::NamedCurve curve;
  std::vector<qg::qgal::QGCertificate> certs;
};

inline std::string fixture_key(const std::string& name, const qg::corpus::Params& params) {
  std::string k = name;
  for (const auto& [a, b] : params) k += ";" + a + "=" + b;
  return k;
}

// Discovery runs are the slow part of the suite; share them process-wide.
inline const Fixture& fixture(const std::string& name, const qg::corpus::Params& params = {}) {
  static std::map<std::string, Fixture> cache;
  std::string key = fixture_key(name, params);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Fixture fx{qg::corpus::build_curve(name, params), {}};
  fx.certs = qg::qgal::discover(fx.curve.form, fx.curve.seeds);
  return cache.emplace(key, std::move(fx)).first->second;
}

inline const std::vector<const Fixture*>& property_fixtures() {
  static std::vector<const Fixture*> all = {
      &fixture("fermat", {{"d", "4"}}),
      &fixture("fermat", {{"d", "5"}}),
      &fixture("fermat", {{"d", "6"}}),
      &fixture("hessian_sextic"),
      &fixture("klein_model"),
      &fixture("quartic_family", {{"a", "1"}, {"b", "0"}, {"c", "0"}}),
      &fixture("coprime_example"),
      &fixture("miura_example", {{"n", "2"}}),
  };
  return all;
}

}  // namespace testutil
