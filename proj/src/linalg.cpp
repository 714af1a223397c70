#include "qg/linalg.hpp"

namespace qg::num {

Mat3 Mat3::identity(const CtxPtr& ctx) {
  Mat3 m = zero(ctx);
  for (int i = 0; i < 3; ++i) m(i, i) = FieldElement::one(ctx);
  return m;
}

Mat3 Mat3::zero(const CtxPtr& ctx) {
  Mat3 m;
  m.a.fill(FieldElement::zero(ctx));
  return m;
}

Mat3 Mat3::diagonal(const FieldElement& d0, const FieldElement& d1, const FieldElement& d2) {
  Mat3 m = zero(d0.context());
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  return m;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r = zero(context());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FieldElement s = FieldElement::zero(context());
      for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
      r(i, j) = s;
    }
  return r;
}

Vec3 Mat3::operator*(const Vec3& v) const {
  Vec3 r = vec3_zero(context());
  for (int i = 0; i < 3; ++i) {
    FieldElement s = FieldElement::zero(context());
    for (int k = 0; k < 3; ++k) s += (*this)(i, k) * v[static_cast<size_t>(k)];
    r[static_cast<size_t>(i)] = s;
  }
  return r;
}

Mat3 Mat3::operator+(const Mat3& o) const {
  Mat3 r = *this;
  for (size_t i = 0; i < 9; ++i) r.a[i] += o.a[i];
  return r;
}

Mat3 Mat3::operator-(const Mat3& o) const {
  Mat3 r = *this;
  for (size_t i = 0; i < 9; ++i) r.a[i] -= o.a[i];
  return r;
}

Mat3 Mat3::scaled(const FieldElement& c) const {
  Mat3 r = *this;
  for (auto& e : r.a) e *= c;
  return r;
}

Mat3 Mat3::transpose() const {
  Mat3 r = *this;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j) std::swap(r(i, j), r(j, i));
  return r;
}

FieldElement Mat3::trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2); }

FieldElement Mat3::det() const {
  const Mat3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3 Mat3::inverse() const {
  FieldElement d = det();
  if (d.is_zero()) throw Error(Errc::SINGULAR_MATRIX, "matrix is not invertible");
  FieldElement di = invert(d);
  const Mat3& m = *this;
  Mat3 adj = zero(context());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // cofactor expansion laid out so no sign bookkeeping is needed
      adj(j, i) = (m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)) * di;
    }
  return adj;
}

Mat3 Mat3::inverse_transpose() const { return inverse().transpose(); }

Vec3 vec3_zero(const CtxPtr& ctx) {
  return {FieldElement::zero(ctx), FieldElement::zero(ctx), FieldElement::zero(ctx)};
}

bool vec3_is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

FieldElement dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 scaled(const Vec3& v, const FieldElement& c) { return {v[0] * c, v[1] * c, v[2] * c}; }

std::vector<Vec3> kernel(const Mat3& m) {
  const CtxPtr& ctx = m.context();
  // Gaussian elimination on a copy; track pivot columns.
  std::array<std::array<FieldElement, 3>, 3> rows;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j);
  std::array<int, 3> pivot_col = {-1, -1, -1};
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int sel = -1;
    for (int r = rank; r < 3; ++r)
      if (!rows[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[static_cast<size_t>(sel)], rows[static_cast<size_t>(rank)]);
    FieldElement inv = invert(rows[static_cast<size_t>(rank)][static_cast<size_t>(col)]);
    for (int j = 0; j < 3; ++j) rows[static_cast<size_t>(rank)][static_cast<size_t>(j)] *= inv;
    for (int r = 0; r < 3; ++r) {
      if (r == rank) continue;
      FieldElement f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (f.is_zero()) continue;
      for (int j = 0; j < 3; ++j)
        rows[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
            f * rows[static_cast<size_t>(rank)][static_cast<size_t>(j)];
    }
    pivot_col[static_cast<size_t>(rank)] = col;
    ++rank;
  }
  std::vector<Vec3> basis;
  for (int col = 0; col < 3; ++col) {
    bool is_pivot = false;
    for (int r = 0; r < rank; ++r) is_pivot |= pivot_col[static_cast<size_t>(r)] == col;
    if (is_pivot) continue;
    Vec3 v = vec3_zero(ctx);
    v[static_cast<size_t>(col)] = FieldElement::one(ctx);
    for (int r = 0; r < rank; ++r)
      v[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] =
          -rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qg::num
