#pragma once

#include <optional>

#include "qg/projective.hpp"
#include "qg/triform.hpp"

namespace qg::plane {

using poly::TriForm;
using poly::UniPoly;

bool curve_contains(const TriForm& C, const ProjPoint& P);
Vec3 gradient(const TriForm& C, const ProjPoint& P);

// Errors: EQUAL_POINTS.
ProjLine line_through(const ProjPoint& P, const ProjPoint& Q);

// Meeting point of two distinct lines. Errors: EQUAL_POINTS.
ProjPoint line_intersection(const ProjLine& a, const ProjLine& b);

// A deterministic point on l distinct from avoid.
ProjPoint second_point_on_line(const ProjLine& l, const ProjPoint& avoid);

// Errors: NOT_ON_CURVE, SINGULAR_POINT.
ProjLine tangent_line(const TriForm& C, const ProjPoint& Q);

// The line is supplied as the point pair (P0, P1); Q must lie on it and on C.
// Errors: NOT_INCIDENT, NOT_ON_CURVE (plus DEGENERATE_LINE, LINE_IN_CURVE).
long intersection_multiplicity(const TriForm& C, const ProjPoint& P0, const ProjPoint& P1,
                               const ProjPoint& Q);

struct CenteredForm {
  ProjTransform M;   // M * P = (1:0:0)
  poly::TriForm form;  // C composed with M^{-1}
};

// Deterministic change of coordinates: the permutation moving P's pivot to
// position 0 followed by the unit shear clearing the other two coordinates.
CenteredForm normalize_center(const TriForm& C, const ProjPoint& P);

// deg pi_P = d - mult_P(C), read off as deg_X after normalize_center.
// Errors: PROJECTION_DEGENERATE when the result is <= 1.
long projection_degree(const TriForm& C, const ProjPoint& P);

// e_P per the tangent/secant case split. Pre: Q smooth on C.
long ramification_index(const TriForm& C, const ProjPoint& P, const ProjPoint& Q);

// I_Q(C, T_QC) - 2. Pre: Q smooth on C.
long flex_contribution(const TriForm& C, const ProjPoint& Q);

struct SmoothnessResult {
  enum class Kind { Smooth, Singular, Unknown };
  Kind kind;
  std::optional<ProjPoint> witness;  // set iff Singular; gradient vanishes there
};

// Sound for Smooth and Singular; Unknown when elimination degenerates or a
// needed root is not representable in the context field.
SmoothnessResult is_smooth(const TriForm& C);

// Square root composed from in-field radicals (Gauss sums, zeta_8, zeta_4)
// when the conductor supports them; nullopt otherwise. Result is verified.
std::optional<FieldElement> sqrt_of_rational(const CtxPtr& ctx, const num::Rational& q);

}  // namespace qg::plane
