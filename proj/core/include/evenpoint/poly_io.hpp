#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "evenpoint/poly.hpp"

namespace evenpoint {

// Textual polynomials:
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (['*'] factor)*
//   factor := coeff | var ['^' exp] | '(' expr ')'
//
// Coefficients use the field literal syntax (decimal residue or [c0,c1,...]).
// Whitespace is insignificant and coefficients are reduced mod p.

/// Renders descending by degree, e.g. "t^2+4*t+1"; zero renders as "0".
std::string format_poly(const PolyRing& ring, const Poly& p);
/// Parses a polynomial in ring.variable(); any other variable is an error.
Poly parse_poly(const PolyRing& ring, std::string_view text);
/// "expr" or "expr / expr".
RationalFunction parse_rational(const PolyRing& ring, std::string_view text);
std::string format_rational(const PolyRing& ring, const RationalFunction& r);

/// Parses an element a(x) + b(x)·y of F_q[x, y]/(y^2 - f). Powers of y are
/// reduced with y^2 = f. Returns (a, b).
std::pair<Poly, Poly> parse_curve_poly(const PolyRing& ring, std::string_view text, const Poly& f);
/// Renders a + b·y, e.g. "x+2+(x+1)*y".
std::string format_curve_poly(const PolyRing& ring, const Poly& a, const Poly& b);

}  // namespace evenpoint
