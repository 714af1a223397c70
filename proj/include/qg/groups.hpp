#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qg/geometry.hpp"
#include "qg/projective.hpp"

namespace qg::groups {

using num::FieldElement;
using plane::ProjLine;
using plane::ProjPoint;
using plane::ProjTransform;
using poly::TriForm;

// Elements sorted by key; closed under product and inverse; contains identity.
struct MatrixGroup {
  std::vector<ProjTransform> elements;
  std::vector<ProjTransform> generators;

  long order() const { return static_cast<long>(elements.size()); }
  bool contains(const ProjTransform& t) const;
  bool same_elements(const MatrixGroup& other) const;
};

class ClosureCapExceeded : public Error {
public:
  ClosureCapExceeded(MatrixGroup partial, long cap)
      : Error(Errc::CAP_EXCEEDED,
              "group closure exceeded cap " + std::to_string(cap)),
        partial_(std::move(partial)) {}
  const MatrixGroup& partial() const { return partial_; }

private:
  MatrixGroup partial_;
};

// Breadth-first product closure on normalized matrices; deterministic order.
MatrixGroup closure(const std::vector<ProjTransform>& generators, long cap = 2048);

// F composed with A equals c*F for some scalar c.
bool transform_preserves_curve(const ProjTransform& t, const TriForm& C);
bool preserves_curve(const MatrixGroup& G, const TriForm& C);

struct HomologyDecomposition {
  enum class Kind { Identity, Homology, Elation, NotCentral };
  Kind kind;
  std::optional<ProjPoint> center;
  std::optional<ProjLine> axis;
  std::optional<FieldElement> ratio;  // simple eigenvalue / double eigenvalue
};

// Classification by the double eigenvalue (root of gcd(charpoly, charpoly'))
// and its eigenspace dimension. The triple-root case reads the eigenvalue off
// the trace, so every 3x3 input lands in one of the four kinds.
HomologyDecomposition homology_decomposition(const ProjTransform& g);

// Conjugation-stability of H under the generators of G. Errors: NOT_SUBGROUP.
bool is_normal_subgroup(const MatrixGroup& H, const MatrixGroup& G);

struct GroupReport {
  long order = 0;
  long generator_count = 0;
  std::map<long, long> element_order_histogram;
  long involution_count = 0;
  std::vector<ProjPoint> homology_centers;  // sorted, deduplicated
};

GroupReport group_report(const MatrixGroup& G);

}  // namespace qg::groups
