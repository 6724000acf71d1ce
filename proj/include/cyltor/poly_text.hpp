#pragma once

#include "cyltor/laurent.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cyltor {

/// Syntax error with the byte offset of the offending position.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parse the textual polynomial grammar over the variables of sig:
/// x1..x{n-1} and y1..y{2g}, integer coefficients, `^` powers (negative
/// allowed on monomial bases), `*` products, parenthesized groups.
/// Whitespace-insensitive.
LaurentPolynomial parse_polynomial(const std::string& text, const SurfaceSignature& sig);

/// Parse over an explicit variable list (e.g. {"t"} for Alexander
/// polynomials or {"a","b"} for pretzel coordinates); variable i maps to
/// coordinate i of sig's exponent lattice.
LaurentPolynomial parse_polynomial(const std::string& text, const SurfaceSignature& sig,
                                   const std::vector<std::string>& variables);

std::string print_polynomial(const LaurentPolynomial& p);
std::string print_polynomial(const LaurentPolynomial& p,
                             const std::vector<std::string>& variables);

/// Parse a single group element written as a monomial with coefficient 1.
ExponentVector parse_group_element(const std::string& text, const SurfaceSignature& sig);

} // namespace cyltor
