#include "convert.hpp"
#include "cyltor/laurent.hpp"
#include "mpoly.hpp"

namespace cyltor {

namespace detail {

MPoly to_mpoly_stripped(const LaurentPolynomial& p) {
    ExponentVector shift = p.min_exponents();
    int n = p.signature().rank();
    MPoly m{n, {}};
    for (const auto& [e, c] : p.terms()) {
        Exps d(n);
        for (int i = 0; i < n; ++i) d[i] = static_cast<std::int32_t>(e[i] - shift[i]);
        m.t.emplace(std::move(d), c);
    }
    return m;
}

LaurentPolynomial from_mpoly(const MPoly& m, const SurfaceSignature& sig) {
    LaurentPolynomial p(sig);
    for (const auto& [e, c] : m.t) {
        ExponentVector v(e.begin(), e.end());
        p.add_term(v, c);
    }
    return p;
}

} // namespace detail

LaurentPolynomial laurent_gcd(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    if (p.is_zero() && q.is_zero()) return p;
    if (p.is_zero()) return normalize_unit(q).cls.rep();
    if (q.is_zero()) return normalize_unit(p).cls.rep();
    detail::MPoly g = detail::mp_gcd(detail::to_mpoly_stripped(p), detail::to_mpoly_stripped(q));
    return normalize_unit(detail::from_mpoly(g, p.signature())).cls.rep();
}

} // namespace cyltor
