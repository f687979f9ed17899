#pragma once

#include "dmk/poly.hpp"

namespace dmk {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Recursive-descent parser for the polynomial grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := rational | ident | '(' expr ')'
/// Rationals are "p/q" or integers; identifiers must be declared
/// variable names.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars);

}  // namespace dmk
