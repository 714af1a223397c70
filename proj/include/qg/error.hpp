#pragma once

#include <stdexcept>
#include <string>

namespace qg {

enum class Errc {
  ZERO_ADJUNCT,
  ROOTS_MISSING,
  DIVISION_BY_ZERO,
  ZERO_DIVISOR,
  INCOMPATIBLE_CONTEXT,
  PARSE_ERROR,
  SINGULAR_MATRIX,
  ZERO_POLY,
  DEGENERATE_LINE,
  LINE_IN_CURVE,
  EQUAL_POINTS,
  NOT_ON_CURVE,
  SINGULAR_POINT,
  NOT_INCIDENT,
  PROJECTION_DEGENERATE,
  NOT_HOMOLOGY,
  NOT_QUASI_GALOIS,
  NOT_AUTOMORPHISM,
  CAP_EXCEEDED,
  NOT_DIVISIBLE,
  NOT_APPLICABLE,
  NOT_SUBGROUP,
  IRRATIONAL_EIGENVALUE,
  UNKNOWN_NAME,
  BAD_PARAMS,
  NO_EXPECTATION,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

// Thrown by zeta() when the requested root of unity is not representable.
// sufficient_conductor is the smallest conductor whose field contains it.
class RootsMissing : public Error {
public:
  RootsMissing(long n, long sufficient_conductor)
      : Error(Errc::ROOTS_MISSING,
              "no primitive root of unity of order " + std::to_string(n) +
                  "; smallest sufficient conductor is " + std::to_string(sufficient_conductor)),
        n_(n), sufficient_conductor_(sufficient_conductor) {}

  long order() const { return n_; }
  long sufficient_conductor() const { return sufficient_conductor_; }

private:
  long n_;
  long sufficient_conductor_;
};

}  // namespace qg
