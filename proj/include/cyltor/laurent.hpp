#pragma once

#include "cyltor/intmat.hpp"
#include "cyltor/ints.hpp"
#include "cyltor/surface.hpp"

#include <map>
#include <string>

namespace cyltor {

/// An element of the group ring Z[H]: a finitely supported map from exponent
/// vectors to nonzero integer coefficients. Terms are kept in the global term
/// order, so equality is structural. Immutable in spirit: operations return
/// fresh values.
class LaurentPolynomial {
public:
    using TermMap = std::map<ExponentVector, Int>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const SurfaceSignature& sig) : sig_(sig) {}

    static LaurentPolynomial constant(const SurfaceSignature& sig, Int c);
    static LaurentPolynomial monomial(const SurfaceSignature& sig, const ExponentVector& e,
                                      Int c = 1);
    static LaurentPolynomial one(const SurfaceSignature& sig) { return constant(sig, 1); }

    const SurfaceSignature& signature() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Int coefficient(const ExponentVector& e) const;

    /// Accumulate c on exponent e, dropping the term if it cancels.
    void add_term(const ExponentVector& e, const Int& c);

    LaurentPolynomial& operator+=(const LaurentPolynomial& q);
    LaurentPolynomial& operator-=(const LaurentPolynomial& q);
    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator*=(const Int& c);

    friend LaurentPolynomial operator+(LaurentPolynomial p, const LaurentPolynomial& q) {
        p += q;
        return p;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial p, const LaurentPolynomial& q) {
        p -= q;
        return p;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q);

    bool operator==(const LaurentPolynomial&) const = default;

    /// Strict total order extending the term order; used for deterministic
    /// factor ordering.
    static bool term_order_less(const LaurentPolynomial& p, const LaurentPolynomial& q);

    /// Per-coordinate minimum exponent over the support. Undefined on zero.
    ExponentVector min_exponents() const;
    /// Multiply by the monomial with exponent e.
    LaurentPolynomial shifted(const ExponentVector& e) const;

private:
    SurfaceSignature sig_;
    TermMap terms_;
};

/// The group-ring involution h -> h^{-1}, extended linearly.
LaurentPolynomial involute(const LaurentPolynomial& p);

/// Augmentation: the ring map with eps(h) = 1, i.e. the sum of coefficients.
Int augment(const LaurentPolynomial& p);

/// A unit of Z[H]: a sign and a group element.
struct Unit {
    int sign = 1;
    ExponentVector monomial;

    bool operator==(const Unit&) const = default;
};

/// A class of nonzero polynomials up to multiplication by +-h. The canonical
/// representative has min exponent 0 in every coordinate and positive
/// coefficient on the lex-smallest term of the support.
class UnitClass {
public:
    UnitClass() = default;

    const LaurentPolynomial& rep() const { return rep_; }

    bool operator==(const UnitClass&) const = default;
    bool operator<(const UnitClass& other) const {
        return LaurentPolynomial::term_order_less(rep_, other.rep_);
    }

private:
    friend struct UnitNormalization;
    friend UnitNormalization normalize_unit(const LaurentPolynomial& p);
    explicit UnitClass(LaurentPolynomial rep) : rep_(std::move(rep)) {}
    LaurentPolynomial rep_;
};

struct UnitNormalization {
    UnitClass cls;
    Unit unit; // p = unit * cls.rep()
};

/// Canonical representative of p up to +-h, with the relating unit.
/// Throws std::domain_error on zero input. Idempotent on representatives.
UnitNormalization normalize_unit(const LaurentPolynomial& p);

/// p = +-h q for some h in H (the relation written p \doteq q).
bool eq_up_to_unit(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// Ring map Z[H] -> Z[H'] induced by the lattice homomorphism
/// (map: target rank x source rank integer matrix). Terms landing on the
/// same exponent are summed.
LaurentPolynomial substitute(const LaurentPolynomial& p, const IntMatrix& map,
                             const SurfaceSignature& target);

/// gcd in Z[H], canonical (unit-normalized) representative. gcd(0,q) = q's
/// canonical form.
LaurentPolynomial laurent_gcd(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// Exact division p / q; returns false if q does not divide p.
bool laurent_divide(const LaurentPolynomial& p, const LaurentPolynomial& q,
                    LaurentPolynomial& quotient);

/// An element of Q(H)^x held as numerator/denominator in Z[H]. The stored
/// form is reduced: gcd(num, den) is a unit, the denominator is canonical,
/// so equal values compare equal structurally. The exact value is preserved.
class LaurentFraction {
public:
    LaurentFraction() = default;
    explicit LaurentFraction(const LaurentPolynomial& num);
    LaurentFraction(const LaurentPolynomial& num, const LaurentPolynomial& den);

    static LaurentFraction one(const SurfaceSignature& sig) {
        return LaurentFraction(LaurentPolynomial::one(sig));
    }

    const LaurentPolynomial& numerator() const { return num_; }
    const LaurentPolynomial& denominator() const { return den_; }
    const SurfaceSignature& signature() const { return num_.signature(); }
    bool is_polynomial() const;

    LaurentFraction inverse() const;
    friend LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b);
    friend LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b);

    bool operator==(const LaurentFraction&) const = default;

private:
    void reduce();
    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

/// p \doteq q as elements of Q(H)^x (cross multiplication).
bool eq_up_to_unit(const LaurentFraction& p, const LaurentFraction& q);

LaurentFraction involute(const LaurentFraction& p);
LaurentFraction substitute(const LaurentFraction& p, const IntMatrix& map,
                           const SurfaceSignature& target);

} // namespace cyltor
