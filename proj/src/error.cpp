#include "qg/error.hpp"

namespace qg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZERO_ADJUNCT: return "ZERO_ADJUNCT";
    case Errc::ROOTS_MISSING: return "ROOTS_MISSING";
    case Errc::DIVISION_BY_ZERO: return "DIVISION_BY_ZERO";
    case Errc::ZERO_DIVISOR: return "ZERO_DIVISOR";
    case Errc::INCOMPATIBLE_CONTEXT: return "INCOMPATIBLE_CONTEXT";
    case Errc::PARSE_ERROR: return "PARSE_ERROR";
    case Errc::SINGULAR_MATRIX: return "SINGULAR_MATRIX";
    case Errc::ZERO_POLY: return "ZERO_POLY";
    case Errc::DEGENERATE_LINE: return "DEGENERATE_LINE";
    case Errc::LINE_IN_CURVE: return "LINE_IN_CURVE";
    case Errc::EQUAL_POINTS: return "EQUAL_POINTS";
    case Errc::NOT_ON_CURVE: return "NOT_ON_CURVE";
    case Errc::SINGULAR_POINT: return "SINGULAR_POINT";
    case Errc::NOT_INCIDENT: return "NOT_INCIDENT";
    case Errc::PROJECTION_DEGENERATE: return "PROJECTION_DEGENERATE";
    case Errc::NOT_HOMOLOGY: return "NOT_HOMOLOGY";
    case Errc::NOT_QUASI_GALOIS: return "NOT_QUASI_GALOIS";
    case Errc::NOT_AUTOMORPHISM: return "NOT_AUTOMORPHISM";
    case Errc::CAP_EXCEEDED: return "CAP_EXCEEDED";
    case Errc::NOT_DIVISIBLE: return "NOT_DIVISIBLE";
    case Errc::NOT_APPLICABLE: return "NOT_APPLICABLE";
    case Errc::NOT_SUBGROUP: return "NOT_SUBGROUP";
    case Errc::IRRATIONAL_EIGENVALUE: return "IRRATIONAL_EIGENVALUE";
    case Errc::UNKNOWN_NAME: return "UNKNOWN_NAME";
    case Errc::BAD_PARAMS: return "BAD_PARAMS";
    case Errc::NO_EXPECTATION: return "NO_EXPECTATION";
  }
  return "UNKNOWN";
}

}  // namespace qg
