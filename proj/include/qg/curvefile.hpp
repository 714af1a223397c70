#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qg/geometry.hpp"

namespace qg::io {

using num::CtxPtr;
using plane::ProjPoint;
using poly::TriForm;

// On-disk JSON schema:
//   { "name": ..., "field": {"conductor": N, "sqrt_adjunct": "expr"?},
//     "degree": d, "terms": [{"exponents": [i,j,k], "coefficient": "expr"}...],
//     "seeds": ["x:y:z"...]? }
// Coefficient and adjunct strings use the coefficient-expression grammar.
struct CurveFile {
  std::string name;
  long conductor = 1;
  std::optional<std::string> sqrt_adjunct;
  long degree = 0;
  std::vector<std::pair<poly::Exponents, std::string>> terms;
  std::vector<std::string> seeds;
};

// Realized semantic content of a curve file.
struct LoadedCurve {
  std::string name;
  CtxPtr ctx;
  TriForm form;
  std::vector<ProjPoint> seeds;
};

// Errors: PARSE_ERROR naming the offending field; coefficient terms must be
// nonzero, exponent triples nonnegative summing to the degree, no duplicates.
CurveFile parse_curve_file(const std::string& text);
CurveFile load_curve_file(const std::string& path);

LoadedCurve realize(const CurveFile& cf);

CurveFile curve_file_from(const std::string& name, const TriForm& form,
                          const std::vector<ProjPoint>& seeds);

std::string to_json(const CurveFile& cf);  // deterministic field and term order
void save_curve_file(const CurveFile& cf, const std::string& path);

// "x:y:z" with coordinate expressions. Errors: PARSE_ERROR.
ProjPoint parse_point(const CtxPtr& ctx, const std::string& text);

// One point per line; blank lines and lines starting with # are skipped.
std::vector<ProjPoint> load_seed_file(const CtxPtr& ctx, const std::string& path);

}  // namespace qg::io
