#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seqlab/cfexpr/ast.hpp"
#include "seqlab/exact/poly.hpp"

namespace seqlab::cf {

// Grammar:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := base ('^' uint)?
//   base   := uint | name | 'x' | 'g' | '(' expr ')'
// There is no implicit multiplication. Identifiers other than x and g must
// appear in params. Throws ParseError with the byte offset of the problem.
Expr parse(std::string_view text, const std::vector<std::string>& params);

// Evaluates an expression free of x and g to a polynomial in its
// parameters. Division is only allowed by nonzero constants.
Poly to_poly(const Expr& e);

}  // namespace seqlab::cf
