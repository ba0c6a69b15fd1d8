#pragma once

#include <optional>
#include <vector>

#include "adlab/multipoly.hpp"

namespace adlab {

// Quotient p/d when the division is exact, nullopt otherwise.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d);

// Scales to integer coefficients with content 1 and a positive leading
// coefficient under the graded-lexicographic order. Zero maps to zero.
MultiPoly normalize_primitive(const MultiPoly& p);

// Greatest common divisor over Q in the normal form above. Recursive
// content/primitive-part reduction with a subresultant remainder sequence
// in the last active variable. Exact but with the usual PRS cost cliff on
// dense high-degree inputs. Throws if both inputs are zero.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

// gcd of a family (at least one nonzero member).
MultiPoly poly_gcd_many(const std::vector<MultiPoly>& ps);

// Sound-but-incomplete coprimality certificate for a family of nonzero
// homogeneous polynomials: true proves the family has no nonconstant
// common factor (restriction to a projective line through a non-vanishing
// point, checked modulo a word-size prime); false means "unknown".
bool certified_coprime_homogeneous(const std::vector<MultiPoly>& ps);

}  // namespace adlab
