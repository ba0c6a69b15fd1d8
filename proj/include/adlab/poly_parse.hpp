#pragma once

#include <string>
#include <vector>

#include "adlab/multipoly.hpp"

namespace adlab {

// Parses an expression over the named variables into expanded canonical
// form. Grammar: +, -, *, ^ with nonnegative integer exponents,
// parentheses, integer and a/b fraction literals; a leading sign is
// allowed; implicit multiplication is rejected. Throws ParseError with a
// position on malformed input or unknown identifiers.
MultiPoly poly_parse(const std::string& text, const std::vector<std::string>& variables);

}  // namespace adlab
