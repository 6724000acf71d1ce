#pragma once

// Conversions between the public Laurent types and the internal engines.

#include "cyltor/laurent.hpp"
#include "mpoly.hpp"

namespace cyltor::detail {

/// Unit-strip p (min exponents to 0) and view it as an MPoly on all rank
/// coordinates. p must be nonzero.
MPoly to_mpoly_stripped(const LaurentPolynomial& p);

/// Interpret an MPoly on the rank coordinates of sig.
LaurentPolynomial from_mpoly(const MPoly& m, const SurfaceSignature& sig);

} // namespace cyltor::detail
