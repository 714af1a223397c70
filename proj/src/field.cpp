#include "qg/field.hpp"

#include <cassert>
#include <numeric>
#include <sstream>

#include "qg/expr.hpp"
#include "qg/ints.hpp"

namespace qg::num {

namespace {

// Dense univariate polynomials over Q, lowest degree first, no trailing zeros.
using RPoly = std::vector<Rational>;

void rp_trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly rp_mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  rp_trim(r);
  return r;
}

RPoly rp_sub(const RPoly& a, const RPoly& b) {
  RPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  rp_trim(r);
  return r;
}

// Quotient and remainder with deg(rem) < deg(b).
std::pair<RPoly, RPoly> rp_divmod(RPoly a, const RPoly& b) {
  assert(!b.empty());
  RPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    rp_trim(a);
    if (a.size() < b.size()) break;
    // rp_trim may drop several leading terms at once; loop handles it
  }
  rp_trim(q);
  return {q, a};
}

RPoly rp_divexact(const RPoly& a, const RPoly& b) {
  auto [q, r] = rp_divmod(a, b);
  assert(r.empty());
  return q;
}

// Monic extended Euclid: returns s with s*a + t*m = gcd, gcd monic.
// Only s and the gcd are needed by inversion.
std::pair<RPoly, RPoly> rp_half_ext_gcd(RPoly a, RPoly m) {
  RPoly s0 = {Rational(1)}, s1 = {};
  RPoly r0 = std::move(a), r1 = std::move(m);
  while (!r1.empty()) {
    auto [q, r] = rp_divmod(r0, r1);
    RPoly s2 = rp_sub(s0, rp_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (!r0.empty() && r0.back() != 1) {
    Rational lead = r0.back();
    for (auto& c : r0) c /= lead;
    for (auto& c : s0) c /= lead;
  }
  return {s0, r0};
}

std::vector<Rational> reduce_mod(const FieldContext& ctx, const RPoly& raw) {
  size_t d = static_cast<size_t>(ctx.degree);
  std::vector<Rational> out(d, Rational(0));
  for (size_t i = 0; i < raw.size() && i < d; ++i) out[i] = raw[i];
  for (size_t k = raw.size(); k-- > d;) {
    if (raw[k] == 0) continue;
    const auto& row = ctx.reduction[k - d];
    for (size_t j = 0; j < d; ++j) out[j] += raw[k] * row[j];
  }
  return out;
}

std::vector<Rational> vec_mul_mod(const FieldContext& ctx, const std::vector<Rational>& a,
                                  const std::vector<Rational>& b) {
  size_t d = static_cast<size_t>(ctx.degree);
  RPoly raw(2 * d - 1, Rational(0));
  for (size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      raw[i + j] += a[i] * b[j];
    }
  }
  return reduce_mod(ctx, raw);
}

bool vec_zero(const std::vector<Rational>& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

// Inverse in Q[x]/Phi_N; pre: a nonzero. Phi_N is irreducible so the gcd is 1.
std::vector<Rational> vec_inv(const FieldContext& ctx, const std::vector<Rational>& a) {
  RPoly ap = a;
  rp_trim(ap);
  auto [s, g] = rp_half_ext_gcd(ap, ctx.modulus);
  assert(g.size() == 1 && g[0] == 1);
  return reduce_mod(ctx, s);
}

void check_ctx(const CtxPtr& ctx) {
  if (!ctx) throw Error(Errc::INCOMPATIBLE_CONTEXT, "detached field element");
}

void check_same(const CtxPtr& a, const CtxPtr& b) {
  check_ctx(a);
  check_ctx(b);
  if (!same_field(a, b))
    throw Error(Errc::INCOMPATIBLE_CONTEXT, "elements from different field contexts");
}

std::string render_part(const std::vector<Rational>& u) {
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < u.size(); ++k) {
    if (u[k] == 0) continue;
    Rational c = u[k];
    bool neg = c < 0;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    Rational a = neg ? Rational(-c) : c;
    if (k == 0) {
      out << rational_str(a);
    } else {
      if (a != 1) out << rational_str(a) << "*";
      out << "z";
      if (k > 1) out << "^" << k;
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(long n) {
  assert(n >= 1);
  std::vector<RPoly> phi_of;  // indexed by position in the divisor list
  auto divs = divisors(n);
  for (size_t i = 0; i < divs.size(); ++i) {
    long d = divs[i];
    RPoly p(static_cast<size_t>(d) + 1, Rational(0));
    p[0] = -1;
    p.back() = 1;  // x^d - 1
    for (size_t j = 0; j < i; ++j)
      if (d % divs[j] == 0) p = rp_divexact(p, phi_of[j]);
    phi_of.push_back(std::move(p));
  }
  return phi_of.back();
}

static CtxPtr build_context(long conductor, std::optional<std::vector<Rational>> adjunct) {
  if (conductor < 1) throw Error(Errc::BAD_PARAMS, "conductor must be positive");
  auto ctx = std::make_shared<FieldContext>();
  ctx->conductor = conductor;
  ctx->modulus = cyclotomic_polynomial(conductor);
  ctx->degree = static_cast<long>(ctx->modulus.size()) - 1;
  size_t d = static_cast<size_t>(ctx->degree);
  if (d >= 2) {
    ctx->reduction.reserve(d - 1);
    // x^d mod Phi = -(low part of Phi); then multiply by x step by step
    std::vector<Rational> row(d);
    for (size_t j = 0; j < d; ++j) row[j] = -ctx->modulus[j];
    ctx->reduction.push_back(row);
    for (size_t k = 1; k + 1 < d; ++k) {
      std::vector<Rational> next(d, Rational(0));
      for (size_t j = 0; j + 1 < d; ++j) next[j + 1] = row[j];
      if (row[d - 1] != 0)
        for (size_t j = 0; j < d; ++j) next[j] += row[d - 1] * ctx->reduction[0][j];
      ctx->reduction.push_back(next);
      row = std::move(next);
    }
  }
  ctx->adjunct = std::move(adjunct);
  return ctx;
}

CtxPtr make_context(long conductor) { return build_context(conductor, std::nullopt); }

CtxPtr make_context(long conductor, const Rational& w) {
  if (w == 0) throw Error(Errc::ZERO_ADJUNCT, "adjunct must be nonzero");
  auto base = build_context(conductor, std::nullopt);
  std::vector<Rational> wv(static_cast<size_t>(base->degree), Rational(0));
  wv[0] = w;
  return build_context(conductor, std::move(wv));
}

CtxPtr make_context(long conductor, const std::string& w_expr) {
  auto base = build_context(conductor, std::nullopt);
  FieldElement w = parse_element(base, w_expr);
  if (w.is_zero()) throw Error(Errc::ZERO_ADJUNCT, "adjunct must be nonzero");
  return build_context(conductor, w.u());
}

bool same_field(const CtxPtr& a, const CtxPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->conductor != b->conductor) return false;
  if (a->adjunct.has_value() != b->adjunct.has_value()) return false;
  if (a->adjunct && *a->adjunct != *b->adjunct) return false;
  return true;
}

FieldElement::FieldElement(CtxPtr ctx, std::vector<Rational> u, std::vector<Rational> v)
    : ctx_(std::move(ctx)), u_(std::move(u)), v_(std::move(v)) {
  assert(u_.size() == static_cast<size_t>(ctx_->degree));
  assert(v_.size() == u_.size());
  assert(ctx_->adjunct || vec_zero(v_));
}

FieldElement FieldElement::zero(const CtxPtr& ctx) {
  check_ctx(ctx);
  size_t d = static_cast<size_t>(ctx->degree);
  return {ctx, std::vector<Rational>(d, Rational(0)), std::vector<Rational>(d, Rational(0))};
}

FieldElement FieldElement::one(const CtxPtr& ctx) { return from_rational(ctx, Rational(1)); }

FieldElement FieldElement::from_rational(const CtxPtr& ctx, const Rational& q) {
  check_ctx(ctx);
  size_t d = static_cast<size_t>(ctx->degree);
  std::vector<Rational> u(d, Rational(0));
  u[0] = q;
  return {ctx, std::move(u), std::vector<Rational>(d, Rational(0))};
}

FieldElement FieldElement::adjunct_root(const CtxPtr& ctx) {
  check_ctx(ctx);
  if (!ctx->adjunct) throw Error(Errc::INCOMPATIBLE_CONTEXT, "context has no adjunct");
  size_t d = static_cast<size_t>(ctx->degree);
  std::vector<Rational> v(d, Rational(0));
  v[0] = 1;
  return {ctx, std::vector<Rational>(d, Rational(0)), std::move(v)};
}

FieldElement FieldElement::from_parts(const CtxPtr& ctx, std::vector<Rational> u,
                                      std::vector<Rational> v) {
  check_ctx(ctx);
  size_t d = static_cast<size_t>(ctx->degree);
  if (u.size() > d || v.size() > d)
    throw Error(Errc::BAD_PARAMS, "from_parts: coefficient vector longer than the field degree");
  u.resize(d, Rational(0));
  v.resize(d, Rational(0));
  if (!ctx->adjunct && !vec_zero(v))
    throw Error(Errc::BAD_PARAMS, "from_parts: adjunct part in a context without an adjunct");
  return {ctx, std::move(u), std::move(v)};
}

bool FieldElement::is_zero() const {
  check_ctx(ctx_);
  return vec_zero(u_) && vec_zero(v_);
}

bool FieldElement::is_one() const { return is_rational() && as_rational() == 1; }

bool FieldElement::is_rational() const {
  check_ctx(ctx_);
  if (!vec_zero(v_)) return false;
  for (size_t i = 1; i < u_.size(); ++i)
    if (u_[i] != 0) return false;
  return true;
}

Rational FieldElement::as_rational() const {
  assert(is_rational());
  return u_[0];
}

FieldElement FieldElement::operator-() const {
  check_ctx(ctx_);
  auto u = u_;
  auto v = v_;
  for (auto& c : u) c = -c;
  for (auto& c : v) c = -c;
  return {ctx_, std::move(u), std::move(v)};
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(ctx_, o.ctx_);
  auto u = u_;
  auto v = v_;
  for (size_t i = 0; i < u.size(); ++i) u[i] += o.u_[i];
  for (size_t i = 0; i < v.size(); ++i) v[i] += o.v_[i];
  return {ctx_, std::move(u), std::move(v)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(ctx_, o.ctx_);
  auto u = u_;
  auto v = v_;
  for (size_t i = 0; i < u.size(); ++i) u[i] -= o.u_[i];
  for (size_t i = 0; i < v.size(); ++i) v[i] -= o.v_[i];
  return {ctx_, std::move(u), std::move(v)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(ctx_, o.ctx_);
  const FieldContext& c = *ctx_;
  // (u1 + v1 s)(u2 + v2 s) = u1 u2 + w v1 v2 + (u1 v2 + v1 u2) s
  auto u = vec_mul_mod(c, u_, o.u_);
  bool lv = !vec_zero(v_), rv = !vec_zero(o.v_);
  if (lv && rv) {
    auto wvv = vec_mul_mod(c, *c.adjunct, vec_mul_mod(c, v_, o.v_));
    for (size_t i = 0; i < u.size(); ++i) u[i] += wvv[i];
  }
  std::vector<Rational> v(u.size(), Rational(0));
  if (rv) {
    auto t = vec_mul_mod(c, u_, o.v_);
    for (size_t i = 0; i < v.size(); ++i) v[i] += t[i];
  }
  if (lv) {
    auto t = vec_mul_mod(c, v_, o.u_);
    for (size_t i = 0; i < v.size(); ++i) v[i] += t[i];
  }
  return {ctx_, std::move(u), std::move(v)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * invert(o); }

bool FieldElement::operator==(const FieldElement& o) const {
  check_same(ctx_, o.ctx_);
  return u_ == o.u_ && v_ == o.v_;
}

FieldElement FieldElement::pow(long k) const {
  check_ctx(ctx_);
  FieldElement base = *this;
  if (k < 0) {
    base = invert(base);
    k = -k;
  }
  FieldElement acc = one(ctx_);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::string FieldElement::str() const {
  check_ctx(ctx_);
  std::string us = render_part(u_);
  if (vec_zero(v_)) return us;
  std::string vs = "(" + render_part(v_) + ")*s";
  if (vec_zero(u_)) return vs;
  return us + " + " + vs;
}

FieldElement invert(const FieldElement& x) {
  check_ctx(x.context());
  const FieldContext& c = *x.context();
  if (x.is_zero()) throw Error(Errc::DIVISION_BY_ZERO, "invert(0)");
  size_t d = static_cast<size_t>(c.degree);
  if (vec_zero(x.v())) {
    return FieldElement::from_parts(x.context(), vec_inv(c, x.u()),
                                    std::vector<Rational>(d, Rational(0)));
  }
  // (u + v s)^-1 = (u - v s) / (u^2 - v^2 w); the norm lives in Q(zeta_N).
  auto u2 = vec_mul_mod(c, x.u(), x.u());
  auto v2w = vec_mul_mod(c, *c.adjunct, vec_mul_mod(c, x.v(), x.v()));
  std::vector<Rational> norm(d);
  for (size_t i = 0; i < d; ++i) norm[i] = u2[i] - v2w[i];
  if (vec_zero(norm))
    throw Error(Errc::ZERO_DIVISOR, "adjunct norm vanishes on a nonzero element");
  auto ninv = vec_inv(c, norm);
  auto u = vec_mul_mod(c, x.u(), ninv);
  auto v = vec_mul_mod(c, x.v(), ninv);
  for (auto& q : v) q = -q;
  return FieldElement::from_parts(x.context(), std::move(u), std::move(v));
}

FieldElement zeta(const CtxPtr& ctx, long n) {
  check_ctx(ctx);
  if (n < 1) throw Error(Errc::BAD_PARAMS, "root order must be positive");
  long N = ctx->conductor;
  size_t d = static_cast<size_t>(ctx->degree);
  auto primitive = [&]() {
    // zeta_N itself: the class of x (constant for N <= 2)
    std::vector<Rational> u(d, Rational(0));
    if (d >= 2)
      u[1] = 1;
    else
      u[0] = ctx->modulus[0] == 1 ? Rational(-1) : Rational(1);  // root of x -+ 1
    return FieldElement::from_parts(ctx, std::move(u), std::vector<Rational>(d, Rational(0)));
  };
  if (N % n == 0) return primitive().pow(N / n);
  if (N % 2 == 1 && (2 * N) % n == 0) {
    FieldElement z2N = -primitive().pow((N + 1) / 2);  // primitive 2N-th root
    return z2N.pow(2 * N / n);
  }
  long want = std::lcm(N, n);
  if (want % 4 == 2) want /= 2;
  throw RootsMissing(n, want);
}

}  // namespace qg::num
