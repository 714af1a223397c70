#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qg/geometry.hpp"
#include "qg/groups.hpp"

namespace qg::qgal {

using num::FieldElement;
using plane::CenteredForm;
using plane::ProjLine;
using plane::ProjPoint;
using plane::ProjTransform;
using poly::TriForm;

using plane::normalize_center;

// n = 1 means the point is not quasi-Galois; generator and axis are then
// absent. For n >= 2 the generator is a homology of projective order exactly
// n centered at the point with the stored axis.
struct QGCertificate {
  ProjPoint point;
  bool on_curve = false;
  long r = 0;  // projection degree
  long n = 1;  // |G0[P]|
  std::optional<ProjTransform> generator;
  std::optional<ProjLine> axis;

  bool galois() const { return n >= 2 && n == r; }
};

struct GPairWitness {
  QGCertificate first, second;
  bool first_fixes_second = false;   // sigma1(P2) = P2
  bool second_fixes_first = false;   // sigma2(P1) = P1
  bool is_gpair() const { return first_fixes_second && second_fixes_first; }
};

struct BoundVerdict {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct CensusReport {
  long degree = 0;
  std::map<long, long> inner;  // exact order -> count, orders >= 2
  std::map<long, long> outer;
  std::map<long, long> inner_cumulative;  // n -> count of orders >= n
  std::map<long, long> outer_cumulative;
  std::vector<BoundVerdict> verdicts;

  long inner_total() const;
  long outer_total() const;
  bool all_bounds_ok() const;
};

class DiscoverCapExceeded : public Error {
public:
  DiscoverCapExceeded(std::vector<QGCertificate> partial, long cap)
      : Error(Errc::CAP_EXCEEDED, "discovery exceeded cap " + std::to_string(cap)),
        partial_(std::move(partial)) {}
  const std::vector<QGCertificate>& partial() const { return partial_; }

private:
  std::vector<QGCertificate> partial_;
};

// The unique candidate (a, b) with F'(zX + aY + bZ, Y, Z) = z^r F', if the
// identity holds; read off the X^{r-1} coefficient relation
// (aY + bZ) a_r = ((z-1)/r) a_{r-1} and confirmed by full expansion.
// Pre: deg_X F' = r >= 2 and the order of z divides r.
std::optional<std::pair<FieldElement, FieldElement>> solve_homology(const TriForm& Fp, long r,
                                                                    const FieldElement& z);

// Largest divisor n of r = deg pi_P admitting a fiber-preserving homology at
// P; one primitive root per divisor suffices (the group is cyclic).
// Errors: ROOTS_MISSING (with the smallest workable conductor),
// PROJECTION_DEGENERATE.
QGCertificate quasi_galois_order(const TriForm& C, const ProjPoint& P);

// Full invariant check: r and on_curve match C, n | r, generator order
// exactly n, fixes the point and the axis pointwise, point off the axis,
// generator preserves C.
bool verify_certificate(const QGCertificate& c, const TriForm& C);

// Center and axis of a non-identity homology. Errors: NOT_HOMOLOGY.
std::pair<ProjPoint, ProjLine> fixed_locus(const ProjTransform& sigma);

// Errors: NOT_QUASI_GALOIS when either order is 1.
GPairWitness is_gpair(const QGCertificate& c1, const QGCertificate& c2);

// Certificate at tau(P) with generator tau sigma tau^{-1}; revalidated.
// Errors: NOT_AUTOMORPHISM.
QGCertificate conjugate_certificate(const QGCertificate& c, const ProjTransform& tau,
                                    const TriForm& C);

// Verified seeds (order >= 2 kept), then orbit fixpoint: images of every
// known point under powers of every known generator. Sorted by point key.
// Errors: DiscoverCapExceeded carrying the partial result.
std::vector<QGCertificate> discover(const TriForm& C, const std::vector<ProjPoint>& seeds,
                                    long cap = 512);

// Tallies split by on_curve plus bound verdicts. The inner bound instance
// runs once per prime class (orders sharing that prime divisor).
CensusReport census(const TriForm& C, const std::vector<QGCertificate>& certs);

// C intersected with F[P1] and F[P2]; the locus intersection is finite when
// the axes differ. Pre: orders >= 2, distinct points.
std::vector<ProjPoint> fixed_locus_intersection(const QGCertificate& c1,
                                                const QGCertificate& c2, const TriForm& C);

struct ClosureBounds {
  long lower = 0;
  std::string upper_symbolic;  // "R*n^r" with the numbers substituted
  long upper_generic = 0;
};

// lower = n * r', upper_generic = r'! * n^{r'} with r' = degree / n.
// Errors: NOT_DIVISIBLE.
ClosureBounds galois_closure_bounds(long n, long degree);

struct GroupPrediction {
  long order = 0;
  std::string label;
};

// Order 2n^2; the structure label is only available for odd prime n.
// Errors: NOT_APPLICABLE when degree != 2n.
GroupPrediction predicted_galois_group(long n, long degree);

// Inverse-transpose generator; point and axis coordinates swap roles.
// Involutive: dual of the dual is the original certificate.
QGCertificate dual_certificate(const QGCertificate& c);

}  // namespace qg::qgal
