#pragma once

#include <string_view>

#include "fracchern/gcring.hpp"

namespace fracchern {

// Grammar: identifiers, integer and "p/q" literals, + - * ^ and parentheses.
// Division is accepted only by a nonzero constant, e.g. "3/2*a" or "(a+b)/2".
// Unknown identifiers raise ParseError.
GradedPolynomial parse_polynomial(const Ring& ring, std::string_view text);

}  // namespace fracchern
