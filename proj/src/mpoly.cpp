#include "mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyltor::detail {

MPoly MPoly::constant(int n, const Int& c) {
    MPoly p{n, {}};
    if (c != 0) p.t.emplace(Exps(n, 0), c);
    return p;
}

MPoly MPoly::variable(int n, int var, int exp) {
    MPoly p{n, {}};
    Exps e(n, 0);
    e[var] = exp;
    p.t.emplace(std::move(e), 1);
    return p;
}

bool MPoly::is_constant() const {
    if (t.empty()) return true;
    if (t.size() > 1) return false;
    for (auto v : t.begin()->first)
        if (v != 0) return false;
    return true;
}

int MPoly::degree(int var) const {
    int d = 0;
    for (const auto& [e, c] : t) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

int MPoly::max_active_var() const {
    int m = -1;
    for (const auto& [e, c] : t)
        for (int i = 0; i < nvars; ++i)
            if (e[i] != 0) m = std::max(m, i);
    return m;
}

void MPoly::add_term(const Exps& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = t.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

MPoly mp_add(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b.t) r.add_term(e, c);
    return r;
}

MPoly mp_sub(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b.t) r.add_term(e, -c);
    return r;
}

MPoly mp_neg(const MPoly& a) {
    MPoly r{a.nvars, {}};
    for (const auto& [e, c] : a.t) r.t.emplace(e, -c);
    return r;
}

MPoly mp_mul_int(const MPoly& a, const Int& c) {
    if (c == 0) return MPoly::zero(a.nvars);
    MPoly r{a.nvars, {}};
    for (const auto& [e, v] : a.t) r.t.emplace(e, v * c);
    return r;
}

MPoly mp_mul(const MPoly& a, const MPoly& b) {
    MPoly r{a.nvars, {}};
    Exps sum(a.nvars);
    for (const auto& [ea, ca] : a.t)
        for (const auto& [eb, cb] : b.t) {
            for (int i = 0; i < a.nvars; ++i) sum[i] = ea[i] + eb[i];
            r.add_term(sum, ca * cb);
        }
    return r;
}

MPoly mp_pow(const MPoly& a, int e) {
    MPoly r = MPoly::constant(a.nvars, 1);
    MPoly base = a;
    while (e > 0) {
        if (e & 1) r = mp_mul(r, base);
        e >>= 1;
        if (e) base = mp_mul(base, base);
    }
    return r;
}

Int mp_int_content(const MPoly& a) {
    Int g = 0;
    for (const auto& [e, c] : a.t) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

MPoly mp_div_int(const MPoly& a, const Int& c) {
    MPoly r{a.nvars, {}};
    for (const auto& [e, v] : a.t) {
        if (v % c != 0) throw std::domain_error("mp_div_int: inexact");
        r.t.emplace(e, v / c);
    }
    return r;
}

bool mp_divide(const MPoly& a, const MPoly& b, MPoly& quo) {
    if (b.is_zero()) throw std::domain_error("mp_divide: zero divisor");
    quo = MPoly::zero(a.nvars);
    MPoly r = a;
    const auto& lb = *b.t.rbegin();
    Exps diff(a.nvars);
    while (!r.is_zero()) {
        const auto& lr = *r.t.rbegin();
        for (int i = 0; i < a.nvars; ++i) {
            diff[i] = lr.first[i] - lb.first[i];
            if (diff[i] < 0) return false;
        }
        if (lr.second % lb.second != 0) return false;
        MPoly term{a.nvars, {}};
        term.t.emplace(diff, lr.second / lb.second);
        quo = mp_add(quo, term);
        r = mp_sub(r, mp_mul(term, b));
    }
    return true;
}

MPoly mp_derivative(const MPoly& a, int var) {
    MPoly r{a.nvars, {}};
    for (const auto& [e, c] : a.t) {
        if (e[var] == 0) continue;
        Exps d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

std::vector<MPoly> mp_coeffs_wrt(const MPoly& a, int var) {
    std::vector<MPoly> cs(static_cast<std::size_t>(a.degree(var)) + 1, MPoly::zero(a.nvars));
    for (const auto& [e, c] : a.t) {
        Exps d = e;
        int k = d[var];
        d[var] = 0;
        cs[k].add_term(d, c);
    }
    return cs;
}

MPoly mp_from_coeffs_wrt(const std::vector<MPoly>& cs, int var) {
    MPoly r = cs.empty() ? MPoly{0, {}} : MPoly::zero(cs[0].nvars);
    for (std::size_t k = 0; k < cs.size(); ++k)
        for (const auto& [e, c] : cs[k].t) {
            Exps d = e;
            d[var] += static_cast<std::int32_t>(k);
            r.add_term(d, c);
        }
    return r;
}

MPoly mp_eval(const MPoly& a, int var, const Int& value) {
    MPoly r{a.nvars, {}};
    for (const auto& [e, c] : a.t) {
        Exps d = e;
        int k = d[var];
        d[var] = 0;
        Int v = c;
        for (int i = 0; i < k; ++i) v *= value;
        r.add_term(d, v);
    }
    return r;
}

MPoly mp_content_wrt(const MPoly& a, int var) {
    MPoly g = MPoly::zero(a.nvars);
    for (const auto& c : mp_coeffs_wrt(a, var)) {
        if (c.is_zero()) continue;
        g = mp_gcd(g, c);
        if (g.is_constant() && !g.is_zero() && g.t.begin()->second == 1) break;
    }
    return g;
}

MPoly mp_pseudo_rem(const MPoly& a, const MPoly& b, int var) {
    int db = b.degree(var);
    auto bc = mp_coeffs_wrt(b, var);
    const MPoly& lb = bc[db];
    MPoly r = a;
    int da = a.degree(var);
    int steps = da - db + 1;
    int taken = 0;
    while (!r.is_zero() && r.degree(var) >= db) {
        auto rc = mp_coeffs_wrt(r, var);
        int dr = static_cast<int>(rc.size()) - 1;
        MPoly lead = rc[dr];
        MPoly shift = MPoly::variable(a.nvars, var, dr - db);
        r = mp_sub(mp_mul(r, lb), mp_mul(mp_mul(lead, shift), b));
        ++taken;
    }
    for (; taken < steps; ++taken) r = mp_mul(r, lb);
    return r;
}

namespace {

MPoly normalize_sign(MPoly a) {
    if (!a.is_zero() && a.t.rbegin()->second < 0) a = mp_neg(a);
    return a;
}

int pick_gcd_var(const MPoly& a, const MPoly& b) {
    int best = -1, best_deg = 0;
    for (int v = 0; v < a.nvars; ++v) {
        int d = std::max(a.degree(v), b.degree(v));
        if (d == 0) continue;
        if (best < 0 || d < best_deg) {
            best = v;
            best_deg = d;
        }
    }
    return best;
}

} // namespace

ContentSplit mp_split_content_wrt(const MPoly& a, int var) {
    MPoly cont = mp_content_wrt(a, var);
    MPoly pp;
    if (!mp_divide(a, cont, pp)) throw std::logic_error("content must divide");
    return {std::move(cont), std::move(pp)};
}

MPoly mp_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    Int ca = mp_int_content(a), cb = mp_int_content(b);
    Int cg = int_gcd(ca, cb);
    MPoly pa = mp_div_int(a, ca), pb = mp_div_int(b, cb);

    int var = pick_gcd_var(pa, pb);
    if (var < 0) return MPoly::constant(a.nvars, cg);

    auto [conta, ppa] = mp_split_content_wrt(pa, var);
    auto [contb, ppb] = mp_split_content_wrt(pb, var);
    MPoly gcont = mp_gcd(conta, contb);

    // Subresultant polynomial remainder sequence on the primitive parts.
    MPoly A = ppa, B = ppb;
    if (A.degree(var) < B.degree(var)) std::swap(A, B);
    MPoly g = MPoly::constant(a.nvars, 1);
    MPoly h = MPoly::constant(a.nvars, 1);
    for (;;) {
        int delta = A.degree(var) - B.degree(var);
        MPoly r = mp_pseudo_rem(A, B, var);
        if (r.is_zero()) break;
        if (r.degree(var) == 0) {
            B = MPoly::constant(a.nvars, 1);
            break;
        }
        MPoly denom = mp_mul(g, mp_pow(h, delta));
        A = B;
        if (!mp_divide(r, denom, B)) throw std::logic_error("subresultant division inexact");
        g = mp_coeffs_wrt(A, var).back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            MPoly num = mp_pow(g, delta);
            MPoly den = mp_pow(h, delta - 1);
            if (!mp_divide(num, den, h)) throw std::logic_error("subresultant h-update inexact");
        }
    }
    MPoly ppg = mp_split_content_wrt(B, var).primitive;
    return normalize_sign(mp_mul_int(mp_mul(gcont, ppg), cg));
}

std::vector<std::pair<MPoly, int>> mp_squarefree_wrt(const MPoly& a, int var) {
    // Yun's algorithm; exact over Z since gcds are primitive-normalized.
    // Expects a primitive w.r.t. var with positive degree.
    std::vector<std::pair<MPoly, int>> out;
    MPoly fp = mp_derivative(a, var);
    MPoly g = mp_gcd(a, fp);
    MPoly c, w;
    if (!mp_divide(a, g, c) || !mp_divide(fp, g, w))
        throw std::logic_error("squarefree: gcd must divide");
    MPoly d = mp_sub(w, mp_derivative(c, var));
    for (int i = 1; c.degree(var) > 0; ++i) {
        if (i > 512) throw std::logic_error("squarefree: runaway");
        MPoly ai = mp_gcd(c, d);
        MPoly cn, wn;
        if (!mp_divide(c, ai, cn) || !mp_divide(d, ai, wn))
            throw std::logic_error("squarefree step inexact");
        if (ai.degree(var) > 0) out.emplace_back(ai, i);
        c = std::move(cn);
        d = mp_sub(wn, mp_derivative(c, var));
    }
    return out;
}

} // namespace cyltor::detail
