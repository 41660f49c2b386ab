#ifndef TVX_POLY_EXPR_HPP
#define TVX_POLY_EXPR_HPP

#include <string>

#include "tvx/coeff_poly.hpp"

namespace tvx {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Initial wall-function expression in one formal variable:
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := uint | 'p' '[' i ',' j ']' | 's' | 't' | 'x' | 'y' | '(' expr ')'
// The constant term must be 1.
struct ParsedPoly {
    char formal = 0;                      // 'x' or 'y'; 0 when no formal variable occurs
    std::vector<CoeffPolynomial> coeffs;  // by power of the formal variable

    int degree() const { return int(coeffs.size()) - 1; }
};

ParsedPoly parse_poly(const std::string& src);

// canonical rendering; parse_poly(pretty_print(p)) reproduces p
std::string pretty_print(const ParsedPoly& p);

}  // namespace tvx

#endif
