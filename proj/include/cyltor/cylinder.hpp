#pragma once

#include "cyltor/aut_star.hpp"
#include "cyltor/laurent.hpp"

#include <tuple>
#include <vector>

namespace cyltor {

/// Torsion-level data of a homology cylinder: an element (phi, tau) of
/// Aut*(H) x| Q(H)^x. tau is stored unit-normalized, oriented so that the
/// augmentation is +1 whenever it is nonzero; equality is phi-equality plus
/// tau-equality up to +-h.
class TorsionClass {
public:
    TorsionClass() = default;
    TorsionClass(AutStarElement phi, const LaurentFraction& tau);

    static TorsionClass identity(const SurfaceSignature& sig);

    const SurfaceSignature& signature() const { return phi_.signature(); }
    const AutStarElement& phi() const { return phi_; }
    const LaurentFraction& tau() const { return tau_; }

    bool operator==(const TorsionClass& other) const {
        return phi_ == other.phi_ && eq_up_to_unit(tau_, other.tau_);
    }

private:
    AutStarElement phi_;
    LaurentFraction tau_;
};

/// Stacking: (phi_M phi_N, tau_M . phi_M(tau_N)).
TorsionClass stack(const TorsionClass& m, const TorsionClass& n);

/// Group inverse: (phi^-1, phi^-1(tau^-1)); stack(m, invert(m)) = identity.
TorsionClass invert(const TorsionClass& m);

/// Mapping classes have trivial torsion: (phi, 1).
TorsionClass mapping_class(const AutStarElement& phi);

/// Boundary gluing data: the target surface obtained by identifying
/// boundary component c of the first surface with c' of the second, and the
/// inclusion-induced lattice maps. Target boundary components are ordered:
/// the first surface's components except c, then the second's except c'.
/// The merged class is oriented by c.
struct GluingMap {
    SurfaceSignature source_a;
    SurfaceSignature source_b;
    SurfaceSignature target;
    int component_a = 0; // 1-based boundary component indices
    int component_b = 0;
    IntMatrix map_a; // target.rank() x source_a.rank()
    IntMatrix map_b;
};

GluingMap make_gluing(const SurfaceSignature& a, int component_a, const SurfaceSignature& b,
                      int component_b);

/// tau = i(tau_M) . i'(tau_M'); phi acts as phi_M and phi_M' on the embedded
/// sublattices and fixes the boundary.
TorsionClass glue(const TorsionClass& m, const TorsionClass& m_prime, const GluingMap& gm);

/// Tie a knot with the given Alexander polynomial (one variable, Delta(1) =
/// +-1) into the cylinder along the group element h != 0: tau is multiplied
/// by Delta(h), phi is unchanged.
TorsionClass tie_knot(const TorsionClass& m, const LaurentPolynomial& alexander,
                      const ExponentVector& h);

/// Tie a string link with the given torsion (augmentation +-1) along the
/// lattice map into H.
TorsionClass tie_string_link(const TorsionClass& m, const LaurentPolynomial& link_torsion,
                             const IntMatrix& map);

/// The closed-form polynomial tau(M(a)) = 1 + (y-1)x + y(y-1)x^2 + ... +
/// y^{a-1}(y-1)x^a in x = x1, y = y1.
LaurentPolynomial ma_polynomial(int a, const SurfaceSignature& sig);

/// The cylinder M(a) over Sigma_{g,2}, g >= 1, as its Torelli representative
/// (identity, p_a).
TorsionClass gen_ma(int a, const SurfaceSignature& sig);

/// Closed-form pretzel torsion over Sigma_{0,3} (variables a = x1, b = x2),
/// valid for r,s > 0 > t with (r+s)(t+s)-s^2 = 1.
LaurentPolynomial pretzel_closed_form(long r, long s, long t);

/// The pretzel cylinder M(r,s,t) over Sigma_{0,3}; requires
/// (r+s)(t+s)-s^2 = +-1. Uses the closed form when it applies and the Fox
/// determinant route otherwise; Aut*(H) is trivial over Sigma_{0,3}, so phi
/// is the identity.
TorsionClass gen_pretzel(long r, long s, long t);

/// Fox-derivative route: the presentation with attaching words
/// alpha = a^r (a b^-1)^s, beta = b^{-t} (a b^-1)^s over the free group on
/// a, b identified with H_1(Sigma_{0,3}).
LaurentPolynomial pretzel_fox_torsion(long r, long s, long t);

/// All (r, s, -x) with (r-x)(s-x) = 1+x^2 via divisor enumeration; x an odd
/// prime. Every returned triple satisfies the pretzel validity condition.
std::vector<std::tuple<long, long, long>> pretzel_family_search(long x);

} // namespace cyltor
