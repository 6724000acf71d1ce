#pragma once

#include "cyltor/intmat.hpp"
#include "cyltor/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cyltor {

/// An element of Aut*(H): the block matrix [[I_{n-1}, B], [0, P0]] with
/// P0 symplectic, acting on exponent vectors by left multiplication
/// (column-vector convention). Fixes the boundary block and preserves the
/// intersection form.
class AutStarElement {
public:
    AutStarElement() = default;
    AutStarElement(const SurfaceSignature& sig, IntMatrix mixing, IntMatrix symplectic);

    static AutStarElement identity(const SurfaceSignature& sig);

    const SurfaceSignature& signature() const { return sig_; }
    const IntMatrix& mixing_block() const { return mixing_; }
    const IntMatrix& symplectic_block() const { return symplectic_; }

    /// Assembled (rank x rank) matrix on H.
    IntMatrix full_matrix() const;

    /// Blocks well-shaped and P0^T J P0 = J, exactly.
    bool is_valid() const;

    bool operator==(const AutStarElement&) const = default;

private:
    SurfaceSignature sig_;
    IntMatrix mixing_;     // (n-1) x 2g
    IntMatrix symplectic_; // 2g x 2g
};

/// The standard symplectic form on the basis (e_1..e_g, f_1..f_g).
IntMatrix symplectic_form(int genus);

LaurentPolynomial apply(const AutStarElement& phi, const LaurentPolynomial& p);
LaurentFraction apply(const AutStarElement& phi, const LaurentFraction& p);

AutStarElement compose(const AutStarElement& phi, const AutStarElement& psi);
AutStarElement invert(const AutStarElement& phi);

/// Finite generating set: symplectic transvections along the standard basis
/// vectors and their pairwise sums, plus single-entry mixing generators.
std::vector<AutStarElement> generators(const SurfaceSignature& sig);

/// Multiset of nonzero coefficients, ascending. Invariant of ~ up to sign.
std::vector<Int> coefficient_multiset(const LaurentPolynomial& p);

/// An element of Z[H_boundary] up to multiplication by a boundary monomial
/// (the relation written u ~~ v). The representative is shifted so minimal
/// exponents are 0; the sign is NOT normalized, since the C(p) invariant is
/// only defined up to a global sign.
struct BoundaryClass {
    LaurentPolynomial rep; // over the boundary-only signature (0, n)

    bool operator==(const BoundaryClass&) const = default;
    bool operator<(const BoundaryClass& o) const {
        return LaurentPolynomial::term_order_less(rep, o.rep);
    }
};

/// C(p): group the terms of p by their symplectic component g, producing
/// u_g in Z[H_boundary]; the multiset of shift-classes {[u_g]}.
std::vector<BoundaryClass> boundary_class_multiset(const LaurentPolynomial& p);

struct DistinctnessCertificate {
    std::string invariant; // which invariant separated the classes
    std::string detail;
};

/// Certificate that p and q are NOT Aut*-equivalent (p !~ q), via an
/// invariant: support size, coefficient multiset up to sign, or C(.) up to
/// sign. nullopt is inconclusive, not a proof of equivalence.
std::optional<DistinctnessCertificate> certify_distinct(const LaurentPolynomial& p,
                                                        const LaurentPolynomial& q);

/// Breadth-first search over generator words of length <= depth for phi with
/// p \doteq phi(q). Deterministic: first witness at minimal depth in the
/// fixed generator order.
std::optional<AutStarElement> certify_equivalent(const LaurentPolynomial& p,
                                                 const LaurentPolynomial& q, int depth);

enum class ThreeValued { Yes, No, Unknown };

/// Semi-decision of p ~ pbar: "No" when an invariant separates them, "Yes"
/// when a witness is found within depth, else "Unknown".
ThreeValued is_self_dual_semidecide(const LaurentPolynomial& p, int depth);

} // namespace cyltor
