#pragma once

// Internal dense-ish multivariate polynomials over Z with non-negative
// exponents. This is the engine room behind gcd, squarefree decomposition
// and factorization; the public surface stays in terms of LaurentPolynomial.

#include "cyltor/ints.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace cyltor::detail {

using Exps = std::vector<std::int32_t>;

struct MPoly {
    int nvars = 0;
    std::map<Exps, Int> t; // lex-sorted, no zero coefficients

    static MPoly zero(int n) { return MPoly{n, {}}; }
    static MPoly constant(int n, const Int& c);
    static MPoly variable(int n, int var, int exp = 1);

    bool is_zero() const { return t.empty(); }
    bool is_constant() const;
    int degree(int var) const;
    int max_active_var() const; // -1 when constant

    void add_term(const Exps& e, const Int& c);
};

MPoly mp_add(const MPoly& a, const MPoly& b);
MPoly mp_sub(const MPoly& a, const MPoly& b);
MPoly mp_mul(const MPoly& a, const MPoly& b);
MPoly mp_neg(const MPoly& a);
MPoly mp_mul_int(const MPoly& a, const Int& c);
MPoly mp_pow(const MPoly& a, int e);

Int mp_int_content(const MPoly& a);
MPoly mp_div_int(const MPoly& a, const Int& c);

/// Exact division; false when b does not divide a.
bool mp_divide(const MPoly& a, const MPoly& b, MPoly& quo);

MPoly mp_derivative(const MPoly& a, int var);

/// Coefficients of a as a polynomial in `var`, index = degree; entries keep
/// nvars with the var exponent zeroed.
std::vector<MPoly> mp_coeffs_wrt(const MPoly& a, int var);
MPoly mp_from_coeffs_wrt(const std::vector<MPoly>& cs, int var);

/// Substitute an integer for var.
MPoly mp_eval(const MPoly& a, int var, const Int& value);

/// gcd of the coefficients w.r.t. var.
MPoly mp_content_wrt(const MPoly& a, int var);

/// Pseudo remainder: lc(b)^(deg a - deg b + 1) a = q b + r w.r.t. var.
MPoly mp_pseudo_rem(const MPoly& a, const MPoly& b, int var);

/// gcd over Z, normalized so the lex-leading coefficient is positive.
MPoly mp_gcd(const MPoly& a, const MPoly& b);

/// Primitive part and content: a = content * pp where content has the sign
/// of a's lex-leading coefficient folded out.
struct ContentSplit {
    MPoly content;
    MPoly primitive;
};
ContentSplit mp_split_content_wrt(const MPoly& a, int var);

/// Squarefree decomposition (Yun) of a primitive polynomial w.r.t. var:
/// returns (q_i, i) with a = prod q_i^i up to sign, q_i squarefree pairwise
/// coprime.
std::vector<std::pair<MPoly, int>> mp_squarefree_wrt(const MPoly& a, int var);

} // namespace cyltor::detail
