#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qg/qgal.hpp"

namespace qg::corpus {

using num::CtxPtr;
using num::FieldElement;
using plane::ProjPoint;
using poly::TriForm;

struct NamedCurve {
  std::string name;     // family identifier
  std::string display;  // family with parameters, e.g. "fermat(6)"
  CtxPtr ctx;
  TriForm form;
  std::vector<ProjPoint> seeds;
  // Tallies only (degree, inner, outer); set for families with a complete
  // census, absent otherwise.
  std::optional<qgal::CensusReport> expected;
  std::optional<long> expected_group_order;
};

using Params = std::map<std::string, std::string>;

// Families: fermat(d), hessian_sextic, klein_model, quartic_family(a,b,c),
// halfdeg_family(n[,a,b,c]), coprime_example, miura_example(n).
// Coefficient parameters are expressions parsed in the family's field.
// Errors: UNKNOWN_NAME, BAD_PARAMS.
NamedCurve build_curve(const std::string& name, const Params& params = {});

// Errors: NO_EXPECTATION for families without a complete census.
qgal::CensusReport expected_census(const std::string& name, const Params& params = {});

std::vector<ProjPoint> seed_points(const std::string& name, const Params& params = {});

std::vector<std::string> family_names();

}  // namespace qg::corpus
