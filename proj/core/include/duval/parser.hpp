#ifndef DUVAL_PARSER_HPP
#define DUVAL_PARSER_HPP

#include <string>
#include <vector>

#include "duval/poly.hpp"

namespace duval {

// Grammar shared by catalog equations, map tuples, and substitution values:
//
//   input   := expr ('=' expr)?          (the '=' form yields LHS - RHS)
//   expr    := ('-')? term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ('^' ('-')? integer)?
//   primary := rational | identifier | '(' expr ')'
//   rational:= integer ('/' integer)?    (division only between literals)
//
// Identifiers resolve to ambient coordinates, declared formal symbols, or
// the built-in constants eps2 (square root of -1), eps3 (primitive cube
// root of unity), and zeta (primitive 12th root of unity).  Anything else
// is an unknown-identifier error.  Negative exponents are allowed only on
// invertible scalar factors.
Poly parse_poly(const std::string& src, const Ambient& ambient,
                const std::vector<std::string>& symbols = {});

// Coordinate-free variant used for substitution values and parameters.
Scalar parse_scalar(const std::string& src, const std::vector<std::string>& symbols = {});

}  // namespace duval

#endif
