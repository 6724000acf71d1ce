#pragma once

// Dense univariate polynomials over Z and the squarefree factorization core:
// finite-field factorization at a good prime, linear multifactor Hensel
// lifting, and Zassenhaus subset recombination.

#include "cyltor/ints.hpp"

#include <vector>

namespace cyltor::detail {

using ZPoly = std::vector<Int>; // coefficient of x^i at index i; zero = empty

void zp_trim(ZPoly& f);
int zp_deg(const ZPoly& f); // -1 for zero
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
bool zp_divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quo);
Int zp_content(const ZPoly& f);
ZPoly zp_derivative(const ZPoly& f);

/// Factor a primitive squarefree polynomial with positive leading
/// coefficient and degree >= 1 into primitive irreducibles with positive
/// leading coefficients. Deterministic.
std::vector<ZPoly> zp_factor_squarefree(const ZPoly& f);

} // namespace cyltor::detail
