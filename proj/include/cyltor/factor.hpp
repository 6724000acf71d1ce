#pragma once

#include "cyltor/laurent.hpp"

#include <optional>
#include <vector>

namespace cyltor {

struct FactorEntry {
    UnitClass cls; // canonical representative of an irreducible element
    int exponent;  // nonzero; negative exponents come from denominators

    bool operator==(const FactorEntry&) const = default;
};

/// Complete irreducible factorization: unit * prod rep^exp reproduces the
/// input exactly. Factor classes are pairwise distinct and canonically
/// ordered.
struct Factorization {
    SurfaceSignature signature;
    Unit unit;
    std::vector<FactorEntry> factors;

    /// Multiply the factorization back together (oracle hook).
    LaurentFraction value() const;
};

Factorization factor(const LaurentFraction& p);
Factorization factor(const LaurentPolynomial& p);

/// True iff p has no factorization into two non-units of Z[H].
/// Throws std::domain_error on zero or unit input.
bool is_irreducible(const LaurentPolynomial& p);

/// An Eisenstein-style irreducibility certificate for p viewed as a
/// polynomial in the chosen variable over the Laurent ring in the others.
/// direct orientation: prime divides every non-leading coefficient and its
/// square does not divide the trailing one; reversed swaps the roles.
struct EisensteinCertificate {
    LaurentPolynomial prime;
    int main_variable;
    bool reversed;
};

std::optional<EisensteinCertificate> eisenstein_certificate(const LaurentPolynomial& p,
                                                            int main_variable);

/// Classification of factorization classes under the involution.
struct PairingEntry {
    UnitClass cls;
    int exponent;
    bool self_conjugate; // cls == class of its involute
    int imbalance;       // exponent minus the conjugate class exponent
};

struct PairingReport {
    std::vector<PairingEntry> entries;
    bool all_balanced;        // every non-self-conjugate class has imbalance 0
    bool self_conjugate_even; // every self-conjugate class has even exponent
};

PairingReport conjugate_pairing(const Factorization& f);

} // namespace cyltor
