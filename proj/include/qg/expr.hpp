#pragma once

#include <string>

#include "qg/field.hpp"

namespace qg::num {

// Coefficient-expression grammar:
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | 'z' ('^' integer)? | 's' | '(' expr ')' | '-' factor
//   rational := integer ('/' positive-integer)?
// z is zeta_N for the context's conductor, s the adjunct root. Whitespace is
// ignored. Throws Error(PARSE_ERROR) naming the offending token.
FieldElement parse_element(const CtxPtr& ctx, const std::string& text);

}  // namespace qg::num
