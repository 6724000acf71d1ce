#include "cyltor/factor.hpp"

#include "convert.hpp"
#include "cyltor/intmat.hpp"
#include "factor_internal.hpp"
#include "mpoly.hpp"
#include "zpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cyltor {

using detail::Exps;
using detail::MPoly;
using detail::ZPoly;

namespace {

ZPoly mpoly_to_zpoly(const MPoly& m, int var) {
    ZPoly f(static_cast<std::size_t>(m.degree(var)) + 1, 0);
    for (const auto& [e, c] : m.t) f[e[var]] = c;
    detail::zp_trim(f);
    return f;
}

MPoly zpoly_to_mpoly(const ZPoly& f, int nvars, int var) {
    MPoly m{nvars, {}};
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        Exps e(nvars, 0);
        e[var] = static_cast<std::int32_t>(i);
        m.t.emplace(std::move(e), f[i]);
    }
    return m;
}

int pick_main_var(const MPoly& m) {
    int best = -1, best_deg = 0;
    for (int v = 0; v < m.nvars; ++v) {
        int d = m.degree(v);
        if (d == 0) continue;
        if (best < 0 || d < best_deg) {
            best = v;
            best_deg = d;
        }
    }
    return best;
}

// Irreducible factorization over Z of an MPoly with integer content +-1.
void factor_mpoly(const MPoly& m, int outer_mult, std::vector<std::pair<MPoly, int>>& out) {
    int main = pick_main_var(m);
    if (main < 0) return; // +-1
    auto [cont, pp] = detail::mp_split_content_wrt(m, main);
    if (!cont.is_constant()) factor_mpoly(cont, outer_mult, out);
    for (auto& [q, mult] : detail::mp_squarefree_wrt(pp, main)) {
        std::vector<MPoly> irr;
        bool univar = true;
        for (int v = 0; v < q.nvars && univar; ++v)
            if (v != main && q.degree(v) > 0) univar = false;
        if (univar) {
            ZPoly f = mpoly_to_zpoly(q, main);
            if (!f.empty() && f.back() < 0)
                for (auto& c : f) c = -c;
            for (const auto& g : detail::zp_factor_squarefree(f))
                irr.push_back(zpoly_to_mpoly(g, q.nvars, main));
        } else {
            irr = detail::factor_squarefree_multivar(q, main);
        }
        for (auto& g : irr) out.emplace_back(std::move(g), outer_mult * mult);
    }
}

// Factor the canonical representative (min exponents 0, positive lex-least
// coefficient): integer content primes plus the support-lattice-reduced
// polynomial part.
std::vector<std::pair<UnitClass, int>> factor_canonical(const LaurentPolynomial& c) {
    std::vector<std::pair<UnitClass, int>> out;
    const SurfaceSignature& sig = c.signature();

    Int content = 0;
    for (const auto& [e, v] : c.terms()) content = int_gcd(content, v);
    for (const auto& [p, mult] : factor_integer(content))
        out.emplace_back(normalize_unit(LaurentPolynomial::constant(sig, p)).cls, mult);

    if (c.term_count() <= 1) return out; // monomial: nothing beyond content

    // Support lattice: differences from the lex-least exponent, saturated so
    // that factorization in the sublattice coordinates matches Z[H].
    const ExponentVector& base = c.terms().begin()->first;
    int rank = sig.rank();
    IntMatrix diffs(static_cast<int>(c.term_count()) - 1, rank);
    {
        int row = 0;
        for (auto it = std::next(c.terms().begin()); it != c.terms().end(); ++it, ++row)
            for (int j = 0; j < rank; ++j) diffs.at(row, j) = it->first[j] - base[j];
    }
    IntMatrix lattice = saturate_rows(diffs);
    int dim = lattice.rows();
    IntMatrix lattice_t = lattice.transposed();

    MPoly reduced{dim, {}};
    std::vector<Int> rhs(rank), coords;
    std::map<ExponentVector, Exps> coord_of;
    std::vector<Exps> raw;
    raw.reserve(c.term_count());
    for (const auto& [e, v] : c.terms()) {
        for (int j = 0; j < rank; ++j) rhs[j] = e[j] - base[j];
        if (!solve_integer(lattice_t, rhs, coords))
            throw std::logic_error("support lattice coordinates must be integral");
        Exps ce(dim);
        for (int j = 0; j < dim; ++j) ce[j] = static_cast<std::int32_t>(coords[j]);
        raw.push_back(std::move(ce));
    }
    Exps mins(dim, 0);
    for (const auto& ce : raw)
        for (int j = 0; j < dim; ++j) mins[j] = std::min(mins[j], ce[j]);
    {
        auto it = c.terms().begin();
        for (auto& ce : raw) {
            for (int j = 0; j < dim; ++j) ce[j] -= mins[j];
            reduced.t.emplace(ce, it->second / (content == 0 ? 1 : content));
            ++it;
        }
    }

    std::vector<std::pair<MPoly, int>> mfactors;
    factor_mpoly(reduced, 1, mfactors);

    for (const auto& [g, mult] : mfactors) {
        LaurentPolynomial f(sig);
        for (const auto& [e, v] : g.t) {
            ExponentVector exp(rank, 0);
            for (int j = 0; j < rank; ++j) {
                Int acc = 0;
                for (int i = 0; i < dim; ++i) acc += lattice.at(i, j) * e[i];
                exp[j] = static_cast<std::int64_t>(acc);
            }
            f.add_term(exp, v);
        }
        out.emplace_back(normalize_unit(f).cls, mult);
    }
    return out;
}

void merge_entry(std::vector<FactorEntry>& entries, const UnitClass& cls, int exp) {
    for (auto& e : entries)
        if (e.cls == cls) {
            e.exponent += exp;
            return;
        }
    entries.push_back(FactorEntry{cls, exp});
}

} // namespace

LaurentFraction Factorization::value() const {
    LaurentPolynomial num =
        LaurentPolynomial::monomial(signature, unit.monomial, unit.sign);
    LaurentPolynomial den = LaurentPolynomial::one(signature);
    for (const auto& [cls, exp] : factors) {
        LaurentPolynomial& side = exp > 0 ? num : den;
        for (int i = 0; i < std::abs(exp); ++i) side = side * cls.rep();
    }
    return LaurentFraction(num, den);
}

Factorization factor(const LaurentPolynomial& p) {
    return factor(LaurentFraction(p));
}

Factorization factor(const LaurentFraction& p) {
    UnitNormalization num = normalize_unit(p.numerator());
    UnitNormalization den = normalize_unit(p.denominator());

    Factorization out;
    out.signature = p.signature();
    out.unit.sign = num.unit.sign * den.unit.sign;
    out.unit.monomial = ev_add(num.unit.monomial, ev_neg(den.unit.monomial));

    for (const auto& [cls, exp] : factor_canonical(num.cls.rep()))
        merge_entry(out.factors, cls, exp);
    for (const auto& [cls, exp] : factor_canonical(den.cls.rep()))
        merge_entry(out.factors, cls, -exp);

    std::erase_if(out.factors, [](const FactorEntry& e) { return e.exponent == 0; });
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FactorEntry& a, const FactorEntry& b) { return a.cls < b.cls; });
    return out;
}

bool is_irreducible(const LaurentPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("is_irreducible: zero input");
    UnitNormalization n = normalize_unit(p);
    if (n.cls.rep() == LaurentPolynomial::one(p.signature()))
        throw std::domain_error("is_irreducible: unit input");
    // Eisenstein fast path: a certificate for a primitive polynomial settles
    // irreducibility without running the full engine.
    const LaurentPolynomial& c = n.cls.rep();
    Int content = 0;
    for (const auto& [e, v] : c.terms()) content = int_gcd(content, v);
    if (content == 1 && c.term_count() > 1) {
        detail::MPoly m = detail::to_mpoly_stripped(c);
        for (int v = 0; v < m.nvars; ++v) {
            if (m.degree(v) == 0) continue;
            detail::MPoly cont = detail::mp_content_wrt(m, v);
            if (!cont.is_constant() || cont.t.begin()->second != 1) continue;
            if (eisenstein_certificate(p, v)) return true;
        }
    }
    const Factorization f = factor(p);
    return f.factors.size() == 1 && f.factors[0].exponent == 1;
}

std::optional<EisensteinCertificate> eisenstein_certificate(const LaurentPolynomial& p,
                                                            int main_variable) {
    if (p.is_zero()) return std::nullopt;
    if (main_variable < 0 || main_variable >= p.signature().rank())
        throw std::invalid_argument("eisenstein_certificate: bad variable index");
    MPoly m = detail::to_mpoly_stripped(p);
    if (m.degree(main_variable) < 1) return std::nullopt;
    auto coeffs = detail::mp_coeffs_wrt(m, main_variable);
    int d = static_cast<int>(coeffs.size()) - 1;

    auto try_orientation = [&](bool reversed) -> std::optional<EisensteinCertificate> {
        const MPoly& lead = reversed ? coeffs[0] : coeffs[d];
        const MPoly& trail = reversed ? coeffs[d] : coeffs[0];
        MPoly g = MPoly::zero(m.nvars);
        for (int i = 0; i <= d; ++i) {
            const MPoly& ci = reversed ? coeffs[d - i] : coeffs[i];
            if (i == d || ci.is_zero()) continue;
            g = detail::mp_gcd(g, ci);
        }
        if (g.is_zero() || (g.is_constant() && g.t.begin()->second == 1)) return std::nullopt;
        // candidate primes: irreducible factors of the common divisor
        LaurentPolynomial gl = detail::from_mpoly(g, p.signature());
        for (const auto& entry : factor(gl).factors) {
            const LaurentPolynomial& prime = entry.cls.rep();
            MPoly pm = detail::to_mpoly_stripped(prime);
            MPoly quo;
            if (detail::mp_divide(lead, pm, quo)) continue; // prime divides lead
            bool divides_all = true;
            for (int i = 0; i < d && divides_all; ++i) {
                const MPoly& ci = reversed ? coeffs[d - i] : coeffs[i];
                if (ci.is_zero()) continue;
                divides_all = detail::mp_divide(ci, pm, quo);
            }
            if (!divides_all) continue;
            if (detail::mp_divide(trail, detail::mp_mul(pm, pm), quo)) continue; // square divides
            return EisensteinCertificate{prime, main_variable, reversed};
        }
        return std::nullopt;
    };

    if (auto cert = try_orientation(false)) return cert;
    return try_orientation(true);
}

PairingReport conjugate_pairing(const Factorization& f) {
    PairingReport report;
    report.all_balanced = true;
    report.self_conjugate_even = true;
    for (const auto& [cls, exp] : f.factors) {
        UnitClass conj = normalize_unit(involute(cls.rep())).cls;
        PairingEntry entry{cls, exp, conj == cls, 0};
        if (!entry.self_conjugate) {
            int conj_exp = 0;
            for (const auto& other : f.factors)
                if (other.cls == conj) conj_exp = other.exponent;
            entry.imbalance = exp - conj_exp;
            if (entry.imbalance != 0) report.all_balanced = false;
        } else if (exp % 2 != 0) {
            report.self_conjugate_even = false;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace cyltor
