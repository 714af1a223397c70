#pragma once

#include <array>
#include <vector>

#include "qg/field.hpp"

namespace qg::num {

using Vec3 = std::array<FieldElement, 3>;

// Row-major 3x3 matrix acting on column vectors: (m*v)_i = sum_j m(i,j) v_j.
struct Mat3 {
  std::array<FieldElement, 9> a;

  static Mat3 identity(const CtxPtr& ctx);
  static Mat3 zero(const CtxPtr& ctx);
  static Mat3 diagonal(const FieldElement& d0, const FieldElement& d1, const FieldElement& d2);

  const FieldElement& operator()(int i, int j) const { return a[static_cast<size_t>(3 * i + j)]; }
  FieldElement& operator()(int i, int j) { return a[static_cast<size_t>(3 * i + j)]; }

  const CtxPtr& context() const { return a[0].context(); }

  Mat3 operator*(const Mat3& o) const;
  Vec3 operator*(const Vec3& v) const;
  Mat3 operator+(const Mat3& o) const;
  Mat3 operator-(const Mat3& o) const;
  bool operator==(const Mat3& o) const { return a == o.a; }
  bool operator!=(const Mat3& o) const { return !(*this == o); }

  Mat3 scaled(const FieldElement& c) const;
  Mat3 transpose() const;
  FieldElement trace() const;
  FieldElement det() const;
  Mat3 inverse() const;  // SINGULAR_MATRIX when det = 0
  Mat3 inverse_transpose() const;
};

Vec3 vec3_zero(const CtxPtr& ctx);
bool vec3_is_zero(const Vec3& v);
FieldElement dot(const Vec3& a, const Vec3& b);
Vec3 scaled(const Vec3& v, const FieldElement& c);

// Basis of the null space; size 0..3, vectors not normalized.
std::vector<Vec3> kernel(const Mat3& m);

}  // namespace qg::num
