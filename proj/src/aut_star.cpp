#include "cyltor/aut_star.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cyltor {

AutStarElement::AutStarElement(const SurfaceSignature& sig, IntMatrix mixing,
                               IntMatrix symplectic)
    : sig_(sig), mixing_(std::move(mixing)), symplectic_(std::move(symplectic)) {
    if (!is_valid()) throw std::invalid_argument("AutStarElement: invalid block data");
}

AutStarElement AutStarElement::identity(const SurfaceSignature& sig) {
    return AutStarElement(sig, IntMatrix(sig.boundary_rank(), sig.symplectic_rank()),
                          IntMatrix::identity(sig.symplectic_rank()));
}

IntMatrix AutStarElement::full_matrix() const {
    int nb = sig_.boundary_rank(), ns = sig_.symplectic_rank();
    IntMatrix m(nb + ns, nb + ns);
    for (int i = 0; i < nb; ++i) m.at(i, i) = 1;
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < ns; ++j) m.at(i, nb + j) = mixing_.at(i, j);
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < ns; ++j) m.at(nb + i, nb + j) = symplectic_.at(i, j);
    return m;
}

bool AutStarElement::is_valid() const {
    int nb = sig_.boundary_rank(), ns = sig_.symplectic_rank();
    if (mixing_.rows() != nb || mixing_.cols() != ns) return false;
    if (symplectic_.rows() != ns || symplectic_.cols() != ns) return false;
    IntMatrix j = symplectic_form(sig_.genus);
    return symplectic_.transposed() * j * symplectic_ == j;
}

IntMatrix symplectic_form(int genus) {
    int g = genus;
    IntMatrix j(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        j.at(i, g + i) = 1;
        j.at(g + i, i) = -1;
    }
    return j;
}

LaurentPolynomial apply(const AutStarElement& phi, const LaurentPolynomial& p) {
    if (phi.signature() != p.signature())
        throw std::invalid_argument("apply: signature mismatch");
    return substitute(p, phi.full_matrix(), p.signature());
}

LaurentFraction apply(const AutStarElement& phi, const LaurentFraction& p) {
    return LaurentFraction(apply(phi, p.numerator()), apply(phi, p.denominator()));
}

AutStarElement compose(const AutStarElement& phi, const AutStarElement& psi) {
    if (phi.signature() != psi.signature())
        throw std::invalid_argument("compose: signature mismatch");
    // [[I,B1],[0,P1]] [[I,B2],[0,P2]] = [[I, B2 + B1 P2],[0, P1 P2]]
    IntMatrix b = psi.mixing_block();
    IntMatrix b1p2 = phi.mixing_block() * psi.symplectic_block();
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) b.at(i, j) += b1p2.at(i, j);
    return AutStarElement(phi.signature(), std::move(b),
                          phi.symplectic_block() * psi.symplectic_block());
}

AutStarElement invert(const AutStarElement& phi) {
    // symplectic inverse is -J P^T J, exactly over Z
    IntMatrix j = symplectic_form(phi.signature().genus);
    IntMatrix pinv = j * phi.symplectic_block().transposed() * j;
    for (int i = 0; i < pinv.rows(); ++i)
        for (int k = 0; k < pinv.cols(); ++k) pinv.at(i, k) = -pinv.at(i, k);
    IntMatrix b = phi.mixing_block() * pinv;
    for (int i = 0; i < b.rows(); ++i)
        for (int k = 0; k < b.cols(); ++k) b.at(i, k) = -b.at(i, k);
    return AutStarElement(phi.signature(), std::move(b), std::move(pinv));
}

namespace {

IntMatrix transvection(int genus, const std::vector<Int>& v) {
    // T_v(z) = z + <z, v> v = (I + v (Jv)^T) z
    int n = 2 * genus;
    IntMatrix j = symplectic_form(genus);
    std::vector<Int> jv = j.apply(v);
    IntMatrix m = IntMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m.at(i, k) += v[i] * jv[k];
    return m;
}

} // namespace

std::vector<AutStarElement> generators(const SurfaceSignature& sig) {
    std::vector<AutStarElement> out;
    int g = sig.genus, nb = sig.boundary_rank(), ns = sig.symplectic_rank();
    auto basis_vec = [&](int i) {
        std::vector<Int> v(ns, 0);
        v[i] = 1;
        return v;
    };
    std::vector<std::vector<Int>> dirs;
    for (int i = 0; i < ns; ++i) dirs.push_back(basis_vec(i));
    for (int i = 0; i < ns; ++i)
        for (int j = i + 1; j < ns; ++j) {
            // skip the dual pair (e_i, f_i): sums only across distinct handles
            if (j == i + g) continue;
            std::vector<Int> v = basis_vec(i);
            v[j] = 1;
            dirs.push_back(std::move(v));
        }
    for (const auto& v : dirs)
        out.emplace_back(sig, IntMatrix(nb, ns), transvection(g, v));
    for (int k = 0; k < nb; ++k)
        for (int l = 0; l < ns; ++l)
            for (int s : {1, -1}) {
                IntMatrix b(nb, ns);
                b.at(k, l) = s;
                out.emplace_back(sig, std::move(b), IntMatrix::identity(ns));
            }
    if (out.empty()) out.push_back(AutStarElement::identity(sig));
    return out;
}

std::vector<Int> coefficient_multiset(const LaurentPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("coefficient_multiset: zero input");
    std::vector<Int> c;
    c.reserve(p.term_count());
    for (const auto& [e, v] : p.terms()) c.push_back(v);
    std::sort(c.begin(), c.end());
    return c;
}

std::vector<BoundaryClass> boundary_class_multiset(const LaurentPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("boundary_class_multiset: zero input");
    const SurfaceSignature& sig = p.signature();
    if (sig.boundary_components < 1)
        throw std::invalid_argument("boundary_class_multiset: needs n >= 1");
    SurfaceSignature bsig{0, sig.boundary_components};
    int nb = sig.boundary_rank(), ns = sig.symplectic_rank();
    std::map<std::vector<std::int64_t>, LaurentPolynomial> groups;
    for (const auto& [e, c] : p.terms()) {
        std::vector<std::int64_t> sym(e.begin() + nb, e.end());
        ExponentVector bexp(e.begin(), e.begin() + nb);
        auto [it, inserted] = groups.try_emplace(sym, bsig);
        it->second.add_term(bexp, c);
    }
    (void)ns;
    std::vector<BoundaryClass> out;
    for (auto& [sym, u] : groups) {
        ExponentVector shift = u.min_exponents();
        out.push_back(BoundaryClass{u.shifted(ev_neg(shift))});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<BoundaryClass> negated(const std::vector<BoundaryClass>& classes) {
    std::vector<BoundaryClass> out;
    out.reserve(classes.size());
    for (const auto& c : classes) out.push_back(BoundaryClass{-c.rep});
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::optional<DistinctnessCertificate> certify_distinct(const LaurentPolynomial& p,
                                                        const LaurentPolynomial& q) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("certify_distinct: zero input");
    if (p.signature() != q.signature())
        throw std::invalid_argument("certify_distinct: signature mismatch");
    if (p.term_count() != q.term_count()) {
        std::ostringstream d;
        d << "support sizes " << p.term_count() << " vs " << q.term_count();
        return DistinctnessCertificate{"support-size", d.str()};
    }
    std::vector<Int> cp = coefficient_multiset(p), cq = coefficient_multiset(q);
    std::vector<Int> cq_neg;
    for (const Int& v : cq) cq_neg.push_back(-v);
    std::sort(cq_neg.begin(), cq_neg.end());
    if (cp != cq && cp != cq_neg)
        return DistinctnessCertificate{"coefficient-multiset",
                                       "coefficient multisets differ up to sign"};
    if (p.signature().boundary_components >= 1) {
        auto bp = boundary_class_multiset(p);
        auto bq = boundary_class_multiset(q);
        if (bp != bq && bp != negated(bq))
            return DistinctnessCertificate{"boundary-classes",
                                           "C(.) multisets differ up to sign"};
    }
    return std::nullopt;
}

std::optional<AutStarElement> certify_equivalent(const LaurentPolynomial& p,
                                                 const LaurentPolynomial& q, int depth) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("certify_equivalent: zero input");
    if (p.signature() != q.signature())
        throw std::invalid_argument("certify_equivalent: signature mismatch");
    const SurfaceSignature& sig = p.signature();

    auto key = [](const AutStarElement& a) {
        std::vector<std::int64_t> k;
        IntMatrix m = a.full_matrix();
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) k.push_back(m.at(i, j).convert_to<std::int64_t>());
        return k;
    };

    std::vector<AutStarElement> step = generators(sig);
    {
        std::vector<AutStarElement> inv;
        for (const auto& gph : step) inv.push_back(invert(gph));
        for (auto& gph : inv) step.push_back(std::move(gph));
    }

    AutStarElement id = AutStarElement::identity(sig);
    if (eq_up_to_unit(p, q)) return id;

    std::map<std::vector<std::int64_t>, bool> seen;
    seen[key(id)] = true;
    std::deque<AutStarElement> frontier{id};
    for (int layer = 1; layer <= depth; ++layer) {
        std::deque<AutStarElement> next;
        for (const auto& phi : frontier) {
            for (const auto& gph : step) {
                AutStarElement cand = compose(phi, gph);
                auto k = key(cand);
                if (seen.count(k)) continue;
                seen[k] = true;
                if (eq_up_to_unit(p, apply(cand, q))) return cand;
                next.push_back(std::move(cand));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return std::nullopt;
}

ThreeValued is_self_dual_semidecide(const LaurentPolynomial& p, int depth) {
    if (p.is_zero()) throw std::domain_error("is_self_dual_semidecide: zero input");
    LaurentPolynomial bar = involute(p);
    if (certify_distinct(p, bar)) return ThreeValued::No;
    if (certify_equivalent(p, bar, depth)) return ThreeValued::Yes;
    return ThreeValued::Unknown;
}

} // namespace cyltor
