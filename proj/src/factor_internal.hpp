#pragma once

#include "mpoly.hpp"

#include <vector>

namespace cyltor::detail {

/// Irreducible factorization of q, squarefree and primitive w.r.t. main,
/// with at least two active variables: evaluation of the other variables at
/// a good integer point, power-series Hensel lifting of the univariate
/// factors modulo a prime power, and subset recombination verified by exact
/// trial division. Falls back to Kronecker substitution in the bivariate
/// case when the point search stalls.
std::vector<MPoly> factor_squarefree_multivar(const MPoly& q, int main);

} // namespace cyltor::detail
