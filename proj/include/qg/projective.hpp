#pragma once

#include <string>

#include "qg/linalg.hpp"
#include "qg/triform.hpp"

namespace qg::plane {

using num::CtxPtr;
using num::FieldElement;
using num::Mat3;
using num::Vec3;

// Coordinates normalized so the first nonzero one equals 1; equality and
// ordering are componentwise on the normalized form.
class ProjPoint {
public:
  explicit ProjPoint(const Vec3& raw) : c_(poly::normalize_triple(raw)) {}
  ProjPoint(const FieldElement& x, const FieldElement& y, const FieldElement& z)
      : ProjPoint(Vec3{x, y, z}) {}

  const Vec3& coords() const { return c_; }
  const CtxPtr& context() const { return c_[0].context(); }

  bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  bool operator<(const ProjPoint& o) const { return key() < o.key(); }

  std::string str() const { return c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str(); }
  std::string key() const { return str(); }

private:
  Vec3 c_;
};

// Dual coordinates (a:b:c) of the line aX + bY + cZ = 0, same normalization.
class ProjLine {
public:
  explicit ProjLine(const Vec3& raw) : c_(poly::normalize_triple(raw)) {}

  const Vec3& coords() const { return c_; }
  bool incident(const ProjPoint& p) const { return num::dot(c_, p.coords()).is_zero(); }

  bool operator==(const ProjLine& o) const { return c_ == o.c_; }
  bool operator!=(const ProjLine& o) const { return !(*this == o); }
  bool operator<(const ProjLine& o) const { return key() < o.key(); }

  std::string str() const { return c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str(); }
  std::string key() const { return str(); }

private:
  Vec3 c_;
};

// Invertible matrix modulo scalars; stored with the first nonzero entry in
// row-major order scaled to 1.
class ProjTransform {
public:
  explicit ProjTransform(const Mat3& m);

  static ProjTransform identity(const CtxPtr& ctx) {
    return ProjTransform(Mat3::identity(ctx));
  }

  const Mat3& matrix() const { return m_; }
  const CtxPtr& context() const { return m_.context(); }

  ProjPoint apply(const ProjPoint& p) const { return ProjPoint(m_ * p.coords()); }
  // Lines transform by the inverse transpose.
  ProjLine apply(const ProjLine& l) const {
    return ProjLine(m_.inverse_transpose() * l.coords());
  }

  ProjTransform operator*(const ProjTransform& o) const { return ProjTransform(m_ * o.m_); }
  ProjTransform inverse() const { return ProjTransform(m_.inverse()); }

  bool is_identity() const;
  bool operator==(const ProjTransform& o) const { return m_ == o.m_; }
  bool operator!=(const ProjTransform& o) const { return !(*this == o); }
  bool operator<(const ProjTransform& o) const { return key() < o.key(); }

  std::string key() const;

private:
  Mat3 m_;
};

// Smallest k >= 1 with t^k projectively the identity; -1 if above cap.
long projective_order(const ProjTransform& t, long cap = 4096);

}  // namespace qg::plane
