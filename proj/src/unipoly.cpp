#include "qg/unipoly.hpp"

#include <cassert>
#include <sstream>

#include "qg/subresultant.hpp"

namespace qg::poly {

namespace {

void trim(std::vector<FieldElement>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

struct FieldOps {
  using Elem = FieldElement;
  CtxPtr ctx;
  Elem zero() const { return FieldElement::zero(ctx); }
  Elem one() const { return FieldElement::one(ctx); }
  bool is_zero(const Elem& e) const { return e.is_zero(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem exact_div(const Elem& a, const Elem& b) const { return a / b; }
};

}  // namespace

UniPoly::UniPoly(CtxPtr ctx, std::vector<FieldElement> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  trim(c_);
}

UniPoly UniPoly::constant(const FieldElement& c) {
  return UniPoly(c.context(), {c});
}

UniPoly UniPoly::linear(const FieldElement& c0, const FieldElement& c1) {
  return UniPoly(c0.context(), {c0, c1});
}

FieldElement UniPoly::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(c_.size())) return FieldElement::zero(ctx_);
  return c_[static_cast<size_t>(k)];
}

FieldElement UniPoly::leading() const {
  assert(!c_.empty());
  return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), FieldElement::zero(ctx_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  auto r = c_;
  for (auto& e : r) e = -e;
  return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(ctx_);
  std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, FieldElement::zero(ctx_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::scaled(const FieldElement& c) const {
  auto r = c_;
  for (auto& e : r) e *= c;
  return UniPoly(ctx_, std::move(r));
}

FieldElement UniPoly::evaluate(const FieldElement& t) const {
  FieldElement acc = FieldElement::zero(ctx_);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(ctx_);
  std::vector<FieldElement> r;
  r.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    r.push_back(c_[i] * FieldElement::from_rational(ctx_, num::Rational(static_cast<long>(i))));
  return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::monic() const {
  assert(!c_.empty());
  return scaled(num::invert(c_.back()));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw Error(Errc::DIVISION_BY_ZERO, "polynomial division by zero");
  std::vector<FieldElement> rem = c_;
  trim(rem);
  size_t dn = divisor.c_.size();
  std::vector<FieldElement> quot;
  if (rem.size() >= dn) quot.assign(rem.size() - dn + 1, FieldElement::zero(ctx_));
  FieldElement lead_inv = num::invert(divisor.c_.back());
  while (rem.size() >= dn) {
    FieldElement c = rem.back() * lead_inv;
    size_t shift = rem.size() - dn;
    quot[shift] = c;
    for (size_t i = 0; i < dn; ++i) rem[shift + i] -= c * divisor.c_[i];
    trim(rem);
  }
  return {UniPoly(ctx_, std::move(quot)), UniPoly(ctx_, std::move(rem))};
}

UniPoly UniPoly::pow(long k) const {
  assert(k >= 0);
  UniPoly acc = constant(FieldElement::one(ctx_));
  UniPoly base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    std::string cs = c_[i].str();
    bool is_one = c_[i].is_one();
    if (i == 0) {
      out << (cs.find_first_of("+-*") != std::string::npos && cs[0] != '-' ? "(" + cs + ")" : cs);
      continue;
    }
    if (!is_one) out << "(" << cs << ")*";
    out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly f = a, g = b;
  while (!g.is_zero()) {
    UniPoly r = f.divmod(g).second;
    f = std::move(g);
    g = std::move(r);
  }
  if (f.is_zero()) return f;
  return f.monic();
}

FieldElement resultant(const UniPoly& f, const UniPoly& g) {
  FieldOps ops{f.context()};
  return subresultant_resultant(ops, f.coeffs(), g.coeffs());
}

long vanishing_order(const UniPoly& f, const FieldElement& t0) {
  if (f.is_zero()) throw Error(Errc::ZERO_POLY, "vanishing order of the zero polynomial");
  UniPoly root = UniPoly::linear(-t0, FieldElement::one(f.context()));
  long order = 0;
  UniPoly cur = f;
  while (true) {
    auto [q, r] = cur.divmod(root);
    if (!r.is_zero()) return order;
    ++order;
    cur = std::move(q);
  }
}

}  // namespace qg::poly
