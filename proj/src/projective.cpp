#include "qg/projective.hpp"

#include <sstream>

namespace qg::plane {

ProjTransform::ProjTransform(const Mat3& m) : m_(m) {
  if (m_.det().is_zero())
    throw Error(Errc::SINGULAR_MATRIX, "projective transform must be invertible");
  for (const auto& e : m_.a) {
    if (e.is_zero()) continue;
    FieldElement inv = num::invert(e);
    for (auto& x : m_.a) x *= inv;
    return;
  }
}

bool ProjTransform::is_identity() const { return m_ == Mat3::identity(context()); }

std::string ProjTransform::key() const {
  std::ostringstream out;
  for (size_t i = 0; i < 9; ++i) {
    if (i) out << ";";
    out << m_.a[i].str();
  }
  return out.str();
}

long projective_order(const ProjTransform& t, long cap) {
  ProjTransform acc = t;
  for (long k = 1; k <= cap; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * t;
  }
  return -1;
}

}  // namespace qg::plane
