#include "qg/triform.hpp"

#include <cassert>
#include <sstream>

namespace qg::poly {

TriForm::TriForm(CtxPtr ctx, long degree, std::map<Exponents, FieldElement> terms)
    : ctx_(std::move(ctx)), degree_(degree), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    const auto& [e, c] = *it;
    if (e[0] + e[1] + e[2] != degree_)
      throw Error(Errc::BAD_PARAMS, "exponent triple does not sum to the degree");
    if (e[0] < 0 || e[1] < 0 || e[2] < 0)
      throw Error(Errc::BAD_PARAMS, "negative exponent");
    it = c.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

TriForm TriForm::monomial(const CtxPtr& ctx, Exponents e, const FieldElement& c) {
  std::map<Exponents, FieldElement> t;
  if (!c.is_zero()) t.emplace(e, c);
  return TriForm(ctx, e[0] + e[1] + e[2], std::move(t));
}

FieldElement TriForm::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement::zero(ctx_) : it->second;
}

TriForm TriForm::operator+(const TriForm& o) const {
  assert(degree_ == o.degree_);
  auto t = terms_;
  for (const auto& [e, c] : o.terms_) {
    auto it = t.find(e);
    if (it == t.end()) {
      t.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  }
  return TriForm(ctx_, degree_, std::move(t));
}

TriForm TriForm::operator-(const TriForm& o) const { return *this + (-o); }

TriForm TriForm::operator-() const {
  auto t = terms_;
  for (auto& [e, c] : t) c = -c;
  return TriForm(ctx_, degree_, std::move(t));
}

TriForm TriForm::operator*(const TriForm& o) const {
  std::map<Exponents, FieldElement> t;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e = {e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
      auto it = t.find(e);
      if (it == t.end())
        t.emplace(e, c1 * c2);
      else
        it->second += c1 * c2;
    }
  for (auto it = t.begin(); it != t.end();)
    it = it->second.is_zero() ? t.erase(it) : std::next(it);
  return TriForm(ctx_, degree_ + o.degree_, std::move(t));
}

TriForm TriForm::scaled(const FieldElement& c) const {
  if (c.is_zero()) return TriForm(ctx_, degree_);
  auto t = terms_;
  for (auto& [e, v] : t) v *= c;
  return TriForm(ctx_, degree_, std::move(t));
}

FieldElement TriForm::evaluate(const Vec3& p) const {
  // per-coordinate power caches
  long d = degree_;
  std::array<std::vector<FieldElement>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    pw[static_cast<size_t>(v)].reserve(static_cast<size_t>(d) + 1);
    pw[static_cast<size_t>(v)].push_back(FieldElement::one(ctx_));
    for (long k = 1; k <= d; ++k)
      pw[static_cast<size_t>(v)].push_back(pw[static_cast<size_t>(v)].back() *
                                           p[static_cast<size_t>(v)]);
  }
  FieldElement acc = FieldElement::zero(ctx_);
  for (const auto& [e, c] : terms_)
    acc += c * pw[0][static_cast<size_t>(e[0])] * pw[1][static_cast<size_t>(e[1])] *
           pw[2][static_cast<size_t>(e[2])];
  return acc;
}

TriForm TriForm::partial(int axis) const {
  std::map<Exponents, FieldElement> t;
  for (const auto& [e, c] : terms_) {
    long k = e[static_cast<size_t>(axis)];
    if (k == 0) continue;
    Exponents ne = e;
    ne[static_cast<size_t>(axis)] = k - 1;
    t.emplace(ne, c * FieldElement::from_rational(ctx_, num::Rational(k)));
  }
  return TriForm(ctx_, degree_ > 0 ? degree_ - 1 : 0, std::move(t));
}

bool TriForm::proportional_to(const TriForm& F, FieldElement* scalar) const {
  if (degree_ != F.degree()) return false;
  if (is_zero() || F.is_zero()) return false;
  if (terms_.size() != F.terms().size()) return false;
  const auto& [e0, c0] = *terms_.begin();
  FieldElement c = F.coeff(e0);
  if (c.is_zero()) return false;
  c = c / c0;
  for (const auto& [e, v] : terms_)
    if (F.coeff(e) != v * c) return false;
  if (scalar) *scalar = c;
  return true;
}

std::string TriForm::str() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"X", "Y", "Z"};
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << " + ";
    first = false;
    bool has_var = e[0] + e[1] + e[2] > 0;
    std::string cs = c.str();
    if (!has_var) {
      out << (cs.find_first_of("+*") != std::string::npos ? "(" + cs + ")" : cs);
      continue;
    }
    bool lead = true;
    if (!c.is_one()) {
      out << "(" << cs << ")*";
      lead = false;
    }
    for (int v = 0; v < 3; ++v) {
      long k = e[static_cast<size_t>(v)];
      if (k == 0) continue;
      if (!lead) out << "*";
      lead = false;
      out << names[v];
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

TriForm substitute_linear(const TriForm& F, const Mat3& A) {
  if (A.det().is_zero()) throw Error(Errc::SINGULAR_MATRIX, "substitution matrix is singular");
  const CtxPtr& ctx = F.context();
  long d = F.degree();
  // row i of A gives the linear form substituted for the i-th variable
  std::array<std::vector<TriForm>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    std::map<Exponents, FieldElement> lin;
    for (int j = 0; j < 3; ++j) {
      if (A(i, j).is_zero()) continue;
      Exponents e = {0, 0, 0};
      e[static_cast<size_t>(j)] = 1;
      lin.emplace(e, A(i, j));
    }
    TriForm L(ctx, 1, std::move(lin));
    auto& cache = pw[static_cast<size_t>(i)];
    cache.push_back(TriForm::monomial(ctx, {0, 0, 0}, FieldElement::one(ctx)));
    for (long k = 1; k <= d; ++k) cache.push_back(cache.back() * L);
  }
  TriForm out(ctx, d);
  for (const auto& [e, c] : F.terms()) {
    TriForm t = pw[0][static_cast<size_t>(e[0])] * pw[1][static_cast<size_t>(e[1])] *
                pw[2][static_cast<size_t>(e[2])];
    out = out + t.scaled(c);
  }
  return out;
}

XSlices x_slices(const TriForm& F) {
  XSlices out;
  for (const auto& [e, c] : F.terms()) {
    long i = e[0];
    auto it = out.slices.find(i);
    if (it == out.slices.end())
      it = out.slices.emplace(i, TriForm(F.context(), F.degree() - i)).first;
    it->second = it->second + TriForm::monomial(F.context(), {0, e[1], e[2]}, c);
    out.r = std::max(out.r, i);
  }
  return out;
}

Vec3 normalize_triple(const Vec3& v) {
  for (const auto& c : v) {
    if (c.is_zero()) continue;
    FieldElement inv = num::invert(c);
    return {v[0] * inv, v[1] * inv, v[2] * inv};
  }
  throw Error(Errc::BAD_PARAMS, "zero coordinate triple");
}

UniPoly restrict_to_line(const TriForm& F, const Vec3& P0, const Vec3& P1) {
  Vec3 a = normalize_triple(P0);
  Vec3 b = normalize_triple(P1);
  if (a[0] == b[0] && a[1] == b[1] && a[2] == b[2])
    throw Error(Errc::DEGENERATE_LINE, "restriction needs two distinct points");
  const CtxPtr& ctx = F.context();
  long d = F.degree();
  std::array<std::vector<UniPoly>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    UniPoly lin = UniPoly::linear(a[static_cast<size_t>(v)], b[static_cast<size_t>(v)]);
    auto& cache = pw[static_cast<size_t>(v)];
    cache.push_back(UniPoly::constant(FieldElement::one(ctx)));
    for (long k = 1; k <= d; ++k) cache.push_back(cache.back() * lin);
  }
  UniPoly g = UniPoly::zero(ctx);
  for (const auto& [e, c] : F.terms())
    g = g + (pw[0][static_cast<size_t>(e[0])] * pw[1][static_cast<size_t>(e[1])] *
             pw[2][static_cast<size_t>(e[2])])
                .scaled(c);
  if (g.is_zero()) throw Error(Errc::LINE_IN_CURVE, "the line lies in the curve");
  return g;
}

TriForm hessian_form(const TriForm& F) {
  assert(F.degree() >= 2);
  std::array<std::array<TriForm, 3>, 3> H = {
      {{TriForm(F.context(), 0), TriForm(F.context(), 0), TriForm(F.context(), 0)},
       {TriForm(F.context(), 0), TriForm(F.context(), 0), TriForm(F.context(), 0)},
       {TriForm(F.context(), 0), TriForm(F.context(), 0), TriForm(F.context(), 0)}}};
  for (int i = 0; i < 3; ++i) {
    TriForm Fi = F.partial(i);
    for (int j = 0; j < 3; ++j)
      H[static_cast<size_t>(i)][static_cast<size_t>(j)] = Fi.partial(j);
  }
  auto& m = H;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace qg::poly
