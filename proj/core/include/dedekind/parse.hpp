#pragma once

// Text grammars shared by the CLI and the tests.
//
//   field element   "3/4", "-7", "(X^2 + Y)/(1 + X*Y)"
//   polynomial      "x^3 + (Y)*x + (X)"; main variable x (alias Z)
//
// Integer literals are arbitrary precision; over F_q they are reduced
// mod q.  Division is allowed by nonzero base-field elements only.

#include <string_view>

#include "dedekind/poly.hpp"

namespace dedekind {

FieldElement parse_field_element(std::string_view text, const ValuationDescriptor& d);
Poly parse_poly(std::string_view text, const ValuationDescriptor& d);

} // namespace dedekind
