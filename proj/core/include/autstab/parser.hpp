#pragma once

#include <string>

#include "autstab/element.hpp"

namespace autstab {

// Grammar (whitespace-insensitive, '*' explicit, '^' binds tightest):
//   expr   := ['-'] term { ('+'|'-') term }
//   term   := factor { '*' factor }
//   factor := base [ '^' ['-'] digits ]
//   base   := digits ['/' digits] | generator-name | '(' expr ')'
// Negative exponents are only valid where Element::pow accepts them
// (single-term monomials in invertible generators); the error is BadExponent.
// Other malformed input throws ParseError with the offending position.
Element parse_element(const std::string& text, SignaturePtr sig);

// Canonical form: terms in descending degree-lexicographic order, explicit
// '*', exponents as '^k', rational coefficients as 'a/b', separators ' + ' /
// ' - ' with magnitudes, zero printed as "0". parse(format(f)) == f.
std::string format_element(const Element& f);

// "z1^2*x1*y1" style; the unit monomial prints as "1".
std::string format_monomial(const AlgebraSignature& sig, const Monomial& m);

}  // namespace autstab
