#include "cyltor/cylinder.hpp"

#include "cyltor/fox.hpp"

#include <sstream>
#include <stdexcept>

namespace cyltor {

namespace {

// Unit-normalize a fraction and orient the sign so the augmentation is
// positive when it is nonzero. Cylinder torsions have augmentation +-1, and
// the +1 representative is the natural one.
LaurentFraction normalize_tau(const LaurentFraction& tau) {
    UnitNormalization num = normalize_unit(tau.numerator());
    UnitNormalization den = normalize_unit(tau.denominator());
    LaurentPolynomial n = num.cls.rep();
    Int an = augment(n), ad = augment(den.cls.rep());
    if (an * ad < 0) n = -n;
    return LaurentFraction(n, den.cls.rep());
}

} // namespace

TorsionClass::TorsionClass(AutStarElement phi, const LaurentFraction& tau)
    : phi_(std::move(phi)), tau_(normalize_tau(tau)) {
    if (tau_.signature() != phi_.signature())
        throw std::invalid_argument("TorsionClass: tau/phi signature mismatch");
}

TorsionClass TorsionClass::identity(const SurfaceSignature& sig) {
    return TorsionClass(AutStarElement::identity(sig), LaurentFraction::one(sig));
}

TorsionClass stack(const TorsionClass& m, const TorsionClass& n) {
    if (m.signature() != n.signature())
        throw std::invalid_argument("stack: signature mismatch");
    return TorsionClass(compose(m.phi(), n.phi()), m.tau() * apply(m.phi(), n.tau()));
}

TorsionClass invert(const TorsionClass& m) {
    AutStarElement phi_inv = invert(m.phi());
    return TorsionClass(phi_inv, apply(phi_inv, m.tau().inverse()));
}

TorsionClass mapping_class(const AutStarElement& phi) {
    return TorsionClass(phi, LaurentFraction::one(phi.signature()));
}

GluingMap make_gluing(const SurfaceSignature& a, int component_a, const SurfaceSignature& b,
                      int component_b) {
    if (a.boundary_components < 1 || b.boundary_components < 1)
        throw std::invalid_argument("make_gluing: both surfaces need boundary");
    if (component_a < 1 || component_a > a.boundary_components || component_b < 1 ||
        component_b > b.boundary_components)
        throw std::invalid_argument("make_gluing: boundary component out of range");

    GluingMap gm;
    gm.source_a = a;
    gm.source_b = b;
    gm.component_a = component_a;
    gm.component_b = component_b;
    gm.target = SurfaceSignature{a.genus + b.genus,
                                 a.boundary_components + b.boundary_components - 2};

    const int tn = gm.target.boundary_components;
    const int tb = gm.target.boundary_rank();
    const int trank = gm.target.rank();

    // target boundary class of the k-th surviving component (1-based): a
    // basis vector for k < tn, minus the sum of all basis vectors for k = tn
    auto target_class = [&](int k) {
        std::vector<Int> v(trank, 0);
        if (k <= tb) {
            v[k - 1] = 1;
        } else {
            for (int i = 0; i < tb; ++i) v[i] = -1;
        }
        return v;
    };

    auto build = [&](const SurfaceSignature& src, int comp, int survivor_offset,
                     int symplectic_offset) {
        IntMatrix map(trank, src.rank());
        int nb = src.boundary_rank();
        // position of source component i (1-based, i != comp) in the target
        auto position = [&](int i) { return survivor_offset + i - (i > comp ? 1 : 0); };
        for (int i = 1; i <= nb; ++i) {
            std::vector<Int> image(trank, 0);
            if (i != comp) {
                image = target_class(position(i));
            } else {
                // the glued class: apply the surface relation
                // [delta_c] = -sum_{i != c} [delta_i]
                for (int j = 1; j <= src.boundary_components; ++j) {
                    if (j == comp) continue;
                    std::vector<Int> part = target_class(position(j));
                    for (int t = 0; t < trank; ++t) image[t] -= part[t];
                }
            }
            for (int t = 0; t < trank; ++t) map.at(t, i - 1) = image[t];
        }
        for (int k = 0; k < src.symplectic_rank(); ++k)
            map.at(tb + symplectic_offset + k, nb + k) = 1;
        return map;
    };

    gm.map_a = build(a, component_a, 0, 0);
    gm.map_b = build(b, component_b, a.boundary_components - 1, a.symplectic_rank());
    return gm;
}

TorsionClass glue(const TorsionClass& m, const TorsionClass& m_prime, const GluingMap& gm) {
    if (m.signature() != gm.source_a || m_prime.signature() != gm.source_b)
        throw std::invalid_argument("glue: signatures do not match the gluing map");
    LaurentFraction tau = substitute(m.tau(), gm.map_a, gm.target) *
                          substitute(m_prime.tau(), gm.map_b, gm.target);

    // phi acts as phi_M and phi_M' on the embedded symplectic sublattices
    // and fixes the target boundary block
    int tb = gm.target.boundary_rank(), ts = gm.target.symplectic_rank();
    IntMatrix mixing(tb, ts);
    IntMatrix symplectic(ts, ts);
    auto install = [&](const TorsionClass& src, const IntMatrix& incl, int offset) {
        const SurfaceSignature& sig = src.signature();
        IntMatrix full = src.phi().full_matrix();
        int nb = sig.boundary_rank();
        for (int k = 0; k < sig.symplectic_rank(); ++k) {
            // image of the source symplectic basis vector under phi, pushed
            // through the inclusion
            std::vector<Int> col(sig.rank());
            for (int r = 0; r < sig.rank(); ++r) col[r] = full.at(r, nb + k);
            std::vector<Int> image = incl.apply(col);
            for (int r = 0; r < tb; ++r) mixing.at(r, offset + k) += image[r];
            for (int r = 0; r < ts; ++r) symplectic.at(r, offset + k) += image[tb + r];
        }
    };
    install(m, gm.map_a, 0);
    install(m_prime, gm.map_b, gm.source_a.symplectic_rank());
    return TorsionClass(AutStarElement(gm.target, std::move(mixing), std::move(symplectic)),
                        tau);
}

TorsionClass tie_knot(const TorsionClass& m, const LaurentPolynomial& alexander,
                      const ExponentVector& h) {
    if (alexander.signature().rank() != 1)
        throw std::invalid_argument("tie_knot: Alexander polynomial must be univariate");
    Int aug = augment(alexander);
    if (aug != 1 && aug != -1)
        throw std::domain_error("tie_knot: Alexander polynomial must have augmentation +-1");
    if (static_cast<int>(h.size()) != m.signature().rank() || ev_is_zero(h))
        throw std::domain_error("tie_knot: h must be a nonzero element of H");
    IntMatrix map(m.signature().rank(), 1);
    for (int i = 0; i < map.rows(); ++i) map.at(i, 0) = h[i];
    return tie_string_link(m, alexander, map);
}

TorsionClass tie_string_link(const TorsionClass& m, const LaurentPolynomial& link_torsion,
                             const IntMatrix& map) {
    Int aug = augment(link_torsion);
    if (aug != 1 && aug != -1)
        throw std::domain_error("tie_string_link: link torsion must have augmentation +-1");
    LaurentPolynomial tied = substitute(link_torsion, map, m.signature());
    return TorsionClass(m.phi(), m.tau() * LaurentFraction(tied));
}

LaurentPolynomial ma_polynomial(int a, const SurfaceSignature& sig) {
    if (a < 1) throw std::invalid_argument("ma_polynomial: a >= 1 required");
    if (sig.genus < 1 || sig.boundary_components != 2)
        throw std::invalid_argument("ma_polynomial: signature must have g >= 1, n = 2");
    // x = x1 (coordinate 0), y = y1 (coordinate 1)
    LaurentPolynomial p = LaurentPolynomial::one(sig);
    for (int i = 1; i <= a; ++i) {
        ExponentVector hi = ev_zero(sig), lo = ev_zero(sig);
        hi[0] = i;
        hi[1] = i;
        lo[0] = i;
        lo[1] = i - 1;
        p.add_term(hi, 1);
        p.add_term(lo, -1);
    }
    return p;
}

TorsionClass gen_ma(int a, const SurfaceSignature& sig) {
    return TorsionClass(AutStarElement::identity(sig),
                        LaurentFraction(ma_polynomial(a, sig)));
}

namespace {

const SurfaceSignature kPretzelSurface{0, 3};

long pretzel_validity(long r, long s, long t) { return (r + s) * (t + s) - s * s; }

// geometric sum 1 + m + m^2 + ... + m^{k-1} on the monomial with exponent e
LaurentPolynomial geometric(const SurfaceSignature& sig, const ExponentVector& e, long k) {
    LaurentPolynomial p(sig);
    ExponentVector acc = ev_zero(sig);
    for (long i = 0; i < k; ++i) {
        p.add_term(acc, 1);
        acc = ev_add(acc, e);
    }
    return p;
}

} // namespace

LaurentPolynomial pretzel_closed_form(long r, long s, long t) {
    if (!(r > 0 && s > 0 && t < 0) || pretzel_validity(r, s, t) != 1)
        throw std::domain_error("pretzel_closed_form: needs r,s > 0 > t with value 1");
    const SurfaceSignature& sig = kPretzelSurface;
    long T = -t;
    ExponentVector ea{1, 0}, eb{0, 1}, eab{1, -1};
    LaurentPolynomial ga_r = geometric(sig, ea, r);
    LaurentPolynomial gb_T = geometric(sig, eb, T);
    LaurentPolynomial gab_s = geometric(sig, eab, s);
    LaurentPolynomial term1 = ga_r * gb_T;
    LaurentPolynomial term2 =
        LaurentPolynomial::monomial(sig, ExponentVector{r, 0}) * gb_T * gab_s;
    LaurentPolynomial term3 =
        LaurentPolynomial::monomial(sig, ExponentVector{1, T - 1}) * ga_r * gab_s;
    return term1 + term2 - term3;
}

LaurentPolynomial pretzel_fox_torsion(long r, long s, long t) {
    FreeWord a = FreeWord::generator(0), b = FreeWord::generator(1);
    FreeWord ab = a * b.inverse();
    FreeWord alpha = a.pow(static_cast<int>(r)) * ab.pow(static_cast<int>(s));
    FreeWord beta = b.pow(static_cast<int>(-t)) * ab.pow(static_cast<int>(s));
    HandlePresentation pres(2, {alpha, beta}, kPretzelSurface, IntMatrix::identity(2));
    return torsion_from_presentation(pres);
}

TorsionClass gen_pretzel(long r, long s, long t) {
    long value = pretzel_validity(r, s, t);
    if (value != 1 && value != -1) {
        std::ostringstream msg;
        msg << "not a homology cylinder: (r+s)(t+s)-s^2 = " << value << " (must be +-1)";
        throw std::domain_error(msg.str());
    }
    LaurentPolynomial tau = (r > 0 && s > 0 && t < 0 && value == 1)
                                ? pretzel_closed_form(r, s, t)
                                : pretzel_fox_torsion(r, s, t);
    // Aut*(H) is trivial over Sigma_{0,3}, so phi is forced to the identity.
    return TorsionClass(AutStarElement::identity(kPretzelSurface), LaurentFraction(tau));
}

std::vector<std::tuple<long, long, long>> pretzel_family_search(long x) {
    if (x < 3 || x % 2 == 0 || !is_prime(Int(x)))
        throw std::domain_error("pretzel_family_search: x must be an odd prime");
    long n = 1 + x * x;
    std::vector<std::tuple<long, long, long>> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        long e = n / d;
        out.emplace_back(x + d, x + e, -x);
        if (e != d) out.emplace_back(x + e, x + d, -x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cyltor
