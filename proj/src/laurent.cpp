#include "cyltor/laurent.hpp"

#include <stdexcept>

namespace cyltor {

namespace {

void check_signatures(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    if (p.signature() != q.signature())
        throw std::invalid_argument("signature mismatch between operands");
}

} // namespace

LaurentPolynomial LaurentPolynomial::constant(const SurfaceSignature& sig, Int c) {
    LaurentPolynomial p(sig);
    if (c != 0) p.terms_.emplace(ev_zero(sig), std::move(c));
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const SurfaceSignature& sig, const ExponentVector& e,
                                              Int c) {
    if (static_cast<int>(e.size()) != sig.rank())
        throw std::invalid_argument("exponent vector does not match signature rank");
    LaurentPolynomial p(sig);
    if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
}

Int LaurentPolynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& q) {
    check_signatures(*this, q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& q) {
    check_signatures(*this, q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(sig_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    check_signatures(p, q);
    LaurentPolynomial r(p.signature());
    for (const auto& [ep, cp] : p.terms_)
        for (const auto& [eq, cq] : q.terms_) r.add_term(ev_add(ep, eq), cp * cq);
    return r;
}

bool LaurentPolynomial::term_order_less(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    auto pi = p.terms_.begin(), qi = q.terms_.begin();
    for (; pi != p.terms_.end() && qi != q.terms_.end(); ++pi, ++qi) {
        if (pi->first != qi->first) return pi->first < qi->first;
        if (pi->second != qi->second) return pi->second < qi->second;
    }
    return qi != q.terms_.end();
}

ExponentVector LaurentPolynomial::min_exponents() const {
    if (terms_.empty()) throw std::domain_error("min_exponents of zero polynomial");
    ExponentVector m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (e[i] < m[i]) m[i] = e[i];
    return m;
}

LaurentPolynomial LaurentPolynomial::shifted(const ExponentVector& e) const {
    LaurentPolynomial r(sig_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(ev_add(k, e), c);
    return r;
}

LaurentPolynomial involute(const LaurentPolynomial& p) {
    LaurentPolynomial r(p.signature());
    for (const auto& [e, c] : p.terms()) r.add_term(ev_neg(e), c);
    return r;
}

Int augment(const LaurentPolynomial& p) {
    Int s = 0;
    for (const auto& [e, c] : p.terms()) s += c;
    return s;
}

UnitNormalization normalize_unit(const LaurentPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("normalize_unit: zero polynomial");
    ExponentVector shift = p.min_exponents();
    LaurentPolynomial rep = p.shifted(ev_neg(shift));
    int sign = rep.terms().begin()->second > 0 ? 1 : -1;
    if (sign < 0) rep = -rep;
    return UnitNormalization{UnitClass(std::move(rep)), Unit{sign, std::move(shift)}};
}

bool eq_up_to_unit(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("eq_up_to_unit: zero polynomial");
    return normalize_unit(p).cls == normalize_unit(q).cls;
}

LaurentPolynomial substitute(const LaurentPolynomial& p, const IntMatrix& map,
                             const SurfaceSignature& target) {
    if (map.cols() != p.signature().rank() || map.rows() != target.rank())
        throw std::invalid_argument("substitute: lattice map shape mismatch");
    LaurentPolynomial r(target);
    for (const auto& [e, c] : p.terms()) r.add_term(map.apply64(e), c);
    return r;
}

bool laurent_divide(const LaurentPolynomial& p, const LaurentPolynomial& q,
                    LaurentPolynomial& quotient) {
    check_signatures(p, q);
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    quotient = LaurentPolynomial(p.signature());
    if (p.is_zero()) return true;
    // Shift so the division happens with non-negative exponents; the unit
    // shifts recombine at the end.
    ExponentVector sp = p.min_exponents(), sq = q.min_exponents();
    LaurentPolynomial r = p.shifted(ev_neg(sp));
    LaurentPolynomial d = q.shifted(ev_neg(sq));
    const auto& dl = *d.terms().rbegin();
    LaurentPolynomial quo(p.signature());
    while (!r.is_zero()) {
        const auto& rl = *r.terms().rbegin();
        ExponentVector diff(rl.first.size());
        for (std::size_t i = 0; i < diff.size(); ++i) {
            diff[i] = rl.first[i] - dl.first[i];
            if (diff[i] < 0) return false;
        }
        if (rl.second % dl.second != 0) return false;
        LaurentPolynomial term =
            LaurentPolynomial::monomial(p.signature(), diff, rl.second / dl.second);
        quo += term;
        r -= term * d;
    }
    ExponentVector adj(sp.size());
    for (std::size_t i = 0; i < adj.size(); ++i) adj[i] = sp[i] - sq[i];
    quotient = quo.shifted(adj);
    return true;
}

LaurentFraction::LaurentFraction(const LaurentPolynomial& num)
    : num_(num), den_(LaurentPolynomial::one(num.signature())) {
    if (num_.is_zero()) throw std::domain_error("LaurentFraction: zero numerator");
}

LaurentFraction::LaurentFraction(const LaurentPolynomial& num, const LaurentPolynomial& den)
    : num_(num), den_(den) {
    if (num.signature() != den.signature())
        throw std::invalid_argument("signature mismatch in fraction");
    if (num_.is_zero()) throw std::domain_error("LaurentFraction: zero numerator");
    if (den_.is_zero()) throw std::domain_error("LaurentFraction: zero denominator");
    reduce();
}

void LaurentFraction::reduce() {
    LaurentPolynomial g = laurent_gcd(num_, den_);
    if (!g.is_zero() && g.term_count() > 0) {
        LaurentPolynomial qn, qd;
        if (laurent_divide(num_, g, qn) && laurent_divide(den_, g, qd)) {
            num_ = std::move(qn);
            den_ = std::move(qd);
        }
    }
    // Canonical denominator; fold the relating unit into the numerator.
    UnitNormalization nd = normalize_unit(den_);
    den_ = nd.cls.rep();
    num_ = num_.shifted(ev_neg(nd.unit.monomial));
    if (nd.unit.sign < 0) num_ = -num_;
}

bool LaurentFraction::is_polynomial() const {
    return den_ == LaurentPolynomial::one(num_.signature());
}

LaurentFraction LaurentFraction::inverse() const { return LaurentFraction(den_, num_); }

LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b) {
    return LaurentFraction(a.num_ * b.num_, a.den_ * b.den_);
}

LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b) {
    return LaurentFraction(a.num_ * b.den_, a.den_ * b.num_);
}

bool eq_up_to_unit(const LaurentFraction& p, const LaurentFraction& q) {
    return eq_up_to_unit(p.numerator() * q.denominator(), q.numerator() * p.denominator());
}

LaurentFraction involute(const LaurentFraction& p) {
    return LaurentFraction(involute(p.numerator()), involute(p.denominator()));
}

LaurentFraction substitute(const LaurentFraction& p, const IntMatrix& map,
                           const SurfaceSignature& target) {
    return LaurentFraction(substitute(p.numerator(), map, target),
                           substitute(p.denominator(), map, target));
}

} // namespace cyltor
