#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cyltor {

/// The surface Sigma_{g,n}. H = H_1(Sigma) splits as H_boundary x H_hat with
/// boundary rank n-1 (0 when n <= 1) and symplectic rank 2g.
struct SurfaceSignature {
    int genus = 0;
    int boundary_components = 0;

    int boundary_rank() const { return boundary_components > 1 ? boundary_components - 1 : 0; }
    int symplectic_rank() const { return 2 * genus; }
    int rank() const { return boundary_rank() + symplectic_rank(); }

    /// (g,n) is small when n <= 1, or n = 2 and g = 0; asymmetric torsion
    /// exists exactly in the large case.
    bool is_large() const {
        return !(boundary_components <= 1 || (boundary_components == 2 && genus == 0));
    }

    bool operator==(const SurfaceSignature&) const = default;
    auto operator<=>(const SurfaceSignature&) const = default;
};

/// An element of H as an integer exponent vector: boundary block first
/// (length n-1), then the symplectic block (length 2g). Vector comparison is
/// the global term order (total lex on the concatenated blocks).
using ExponentVector = std::vector<std::int64_t>;

ExponentVector ev_zero(const SurfaceSignature& sig);
ExponentVector ev_add(const ExponentVector& a, const ExponentVector& b);
ExponentVector ev_neg(const ExponentVector& a);
bool ev_is_zero(const ExponentVector& a);

/// Variable name for coordinate i of the exponent lattice: x1..x{n-1} then
/// y1..y{2g}.
std::string variable_name(const SurfaceSignature& sig, int index);

} // namespace cyltor
