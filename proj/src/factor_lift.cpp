#include "factor_internal.hpp"
#include "zpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyltor::detail {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic mod a prime power M, with polynomials in the main variable as
// dense coefficient vectors and truncated power series in the shifted
// evaluation variables.

struct Ring {
    Int m;
    Int reduce(Int a) const {
        a %= m;
        if (a < 0) a += m;
        return a;
    }
    Int mul(const Int& a, const Int& b) const { return a * b % m; }
    Int symmetric(Int a) const {
        a %= m;
        if (a < 0) a += m;
        if (2 * a > m) a -= m;
        return a;
    }
    Int inv(const Int& a) const {
        // extended Euclid; a must be coprime to m
        Int r0 = m, r1 = reduce(a), s0 = 0, s1 = 1;
        while (r1 != 0) {
            Int q = r0 / r1;
            Int r2 = r0 - q * r1;
            Int s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0 != 1) throw std::logic_error("Ring::inv: not invertible");
        return reduce(s0);
    }
};

using RPoly = std::vector<Int>; // in the main variable, index = degree

void rp_trim(RPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

RPoly rp_mul(const Ring& R, const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] = (r[i + j] + a[i] * b[j]) % R.m;
    }
    rp_trim(r);
    return r;
}

RPoly rp_sub(const Ring& R, const RPoly& a, const RPoly& b) {
    RPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = R.reduce(r[i] - b[i]);
    rp_trim(r);
    return r;
}

// remainder modulo a monic divisor
RPoly rp_rem(const Ring& R, RPoly a, const RPoly& monic) {
    rp_trim(a);
    while (a.size() >= monic.size()) {
        Int q = a.back();
        std::size_t off = a.size() - monic.size();
        if (q != 0)
            for (std::size_t i = 0; i < monic.size(); ++i)
                a[off + i] = R.reduce(a[off + i] - q * monic[i]);
        a.pop_back();
        rp_trim(a);
    }
    return a;
}

int weight(const Exps& e) {
    int w = 0;
    for (auto v : e) w += v;
    return w;
}

// truncated multivariate power series with RPoly coefficients
using Series = std::map<Exps, RPoly>;

Series series_mul(const Ring& R, const Series& a, const Series& b, int cap) {
    Series out;
    for (const auto& [ea, pa] : a) {
        int wa = weight(ea);
        for (const auto& [eb, pb] : b) {
            if (wa + weight(eb) > cap) continue;
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            RPoly prod = rp_mul(R, pa, pb);
            auto [it, inserted] = out.try_emplace(e, prod);
            if (!inserted) {
                RPoly& acc = it->second;
                if (acc.size() < prod.size()) acc.resize(prod.size(), 0);
                for (std::size_t i = 0; i < prod.size(); ++i)
                    acc[i] = R.reduce(acc[i] + prod[i]);
                rp_trim(acc);
            }
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
    return out;
}

// Expand m (restricted to main and the listed variables) around the point w:
// result is a series in s_j = var_j - w_j with main-variable polynomials as
// coefficients, truncated at total degree cap, coefficients mod R.
Series expand_around(const Ring& R, const MPoly& m, int main, const std::vector<int>& others,
                     const std::vector<Int>& w, int cap) {
    Series out;
    std::size_t k = others.size();
    // precompute powers of w_j
    std::vector<std::vector<Int>> wpow(k);
    for (std::size_t j = 0; j < k; ++j) {
        int dj = m.degree(others[j]);
        wpow[j].resize(dj + 1);
        wpow[j][0] = 1;
        for (int i = 1; i <= dj; ++i) wpow[j][i] = R.reduce(wpow[j][i - 1] * w[j]);
    }
    for (const auto& [e, c] : m.t) {
        int xd = e[main];
        std::vector<int> ej(k);
        for (std::size_t j = 0; j < k; ++j) ej[j] = e[others[j]];
        // enumerate multi-indices i <= ej with total weight <= cap
        Exps idx(k, 0);
        for (;;) {
            int wsum = 0;
            for (std::size_t j = 0; j < k; ++j) wsum += idx[j];
            if (wsum <= cap) {
                Int coef = R.reduce(c);
                for (std::size_t j = 0; j < k; ++j) {
                    // binomial(ej, idx) * w^(ej-idx)
                    Int binom = 1;
                    for (int t = 0; t < idx[j]; ++t)
                        binom = binom * (ej[j] - t) / (t + 1);
                    coef = R.mul(coef, R.reduce(binom));
                    coef = R.mul(coef, wpow[j][ej[j] - idx[j]]);
                }
                if (coef != 0) {
                    RPoly& slot = out[idx];
                    if (slot.size() <= static_cast<std::size_t>(xd)) slot.resize(xd + 1, 0);
                    slot[xd] = R.reduce(slot[xd] + coef);
                }
            }
            // increment idx within the box [0, ej]
            std::size_t j = 0;
            while (j < k && idx[j] == ej[j]) idx[j++] = 0;
            if (j == k) break;
            ++idx[j];
        }
    }
    for (auto& [e, p] : out) rp_trim(p);
    std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
    return out;
}

// Inverse of a scalar series (x-degree 0 coefficients) with invertible
// constant term, truncated at total degree cap.
Series series_inverse_scalar(const Ring& R, const Series& a, int k, int cap) {
    Exps zero(k, 0);
    auto it = a.find(zero);
    if (it == a.end() || it->second.empty())
        throw std::logic_error("series_inverse_scalar: zero constant term");
    Int inv0 = R.inv(it->second[0]);
    Series out;
    out[zero] = RPoly{inv0};
    // order-by-order: out[e] = -inv0 * sum_{0 < b <= e} a[b] * out[e-b]
    // enumerate all multi-indices of total degree 1..cap in lex order per
    // weight; generate candidates from sums of existing keys
    // simple approach: iterate weights, enumerate all e with weight m that
    // can receive contributions
    std::vector<Exps> all;
    {
        Exps e(k, 0);
        for (;;) {
            if (weight(e) <= cap) all.push_back(e);
            // increment with cap bound per coordinate
            std::size_t j = 0;
            while (j < static_cast<std::size_t>(k) && e[j] == cap) e[j++] = 0;
            if (j == static_cast<std::size_t>(k)) break;
            ++e[j];
        }
        std::sort(all.begin(), all.end(), [](const Exps& x, const Exps& y) {
            int wx = weight(x), wy = weight(y);
            if (wx != wy) return wx < wy;
            return x < y;
        });
    }
    for (const Exps& e : all) {
        if (weight(e) == 0) continue;
        Int acc = 0;
        for (const auto& [b, pb] : a) {
            if (pb.empty() || weight(b) == 0) continue;
            bool ok = true;
            Exps rest(k);
            for (int j = 0; j < k; ++j) {
                rest[j] = e[j] - b[j];
                if (rest[j] < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            auto ri = out.find(rest);
            if (ri == out.end() || ri->second.empty()) continue;
            acc = R.reduce(acc + pb[0] * ri->second[0]);
        }
        if (acc != 0) out[e] = RPoly{R.reduce(R.m - R.mul(acc, inv0))};
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
    return out;
}

MPoly normalize_mpoly_sign(MPoly a) {
    if (!a.is_zero() && a.t.rbegin()->second < 0) a = mp_neg(a);
    return a;
}

// Substitute var := var + c (Taylor shift) exactly over Z.
MPoly mp_shift_var(const MPoly& a, int var, const Int& c) {
    auto cs = mp_coeffs_wrt(a, var);
    MPoly res = MPoly::zero(a.nvars);
    MPoly lin = mp_add(MPoly::variable(a.nvars, var), MPoly::constant(a.nvars, c));
    for (std::size_t i = cs.size(); i-- > 0;) res = mp_add(mp_mul(res, lin), cs[i]);
    return res;
}

MPoly primitive_part(const MPoly& a, int main) {
    MPoly cont = mp_content_wrt(a, main);
    MPoly pp;
    if (!mp_divide(a, cont, pp)) throw std::logic_error("primitive_part: inexact");
    return normalize_mpoly_sign(pp);
}

// Univariate squarefreeness over Z via the one-variable mpoly gcd.
bool zpoly_squarefree(const ZPoly& u) {
    MPoly m{1, {}};
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0) m.t.emplace(Exps{static_cast<std::int32_t>(i)}, u[i]);
    MPoly g = mp_gcd(m, mp_derivative(m, 0));
    return g.is_constant();
}

const int kLiftPrimes[] = {31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Kronecker fallback for the bivariate case: substitute the series variable
// by a high power of the main one, factor the univariate image, and pull
// subsets back.
std::vector<MPoly> kronecker_bivariate(const MPoly& q, int main, int other) {
    int dx = q.degree(main);
    int stride = dx + 1;
    ZPoly image;
    for (const auto& [e, c] : q.t) {
        std::size_t pos = static_cast<std::size_t>(e[main]) +
                          static_cast<std::size_t>(e[other]) * stride;
        if (image.size() <= pos) image.resize(pos + 1, 0);
        image[pos] += c;
    }
    zp_trim(image);
    Int content = zp_content(image);
    if (image.back() < 0) content = -content;
    if (content != 1 && content != 0)
        for (auto& c : image) c /= content;
    if (!zpoly_squarefree(image))
        throw std::logic_error("kronecker fallback: image not squarefree");
    std::vector<ZPoly> pool = zp_factor_squarefree(image);

    std::vector<MPoly> out;
    MPoly rest = q;
    std::vector<int> idx(pool.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::size_t size = 1;
    while (!idx.empty() && size <= idx.size()) {
        std::vector<std::size_t> comb(size);
        std::iota(comb.begin(), comb.end(), 0);
        bool found = false;
        for (;;) {
            ZPoly prod{1};
            for (auto c : comb) prod = zp_mul(prod, pool[idx[c]]);
            // pull exponents apart: e = e_main + stride * e_other, valid only
            // if every e_main stays within the degree of q
            MPoly cand{q.nvars, {}};
            bool valid = true;
            for (std::size_t i = 0; i < prod.size() && valid; ++i) {
                if (prod[i] == 0) continue;
                int em = static_cast<int>(i % stride);
                int eo = static_cast<int>(i / stride);
                if (em > dx) {
                    valid = false;
                    break;
                }
                Exps e(q.nvars, 0);
                e[main] = em;
                e[other] = eo;
                cand.t.emplace(std::move(e), prod[i]);
            }
            MPoly quo;
            if (valid) {
                MPoly pp = primitive_part(cand, main);
                if (mp_divide(rest, pp, quo)) {
                    out.push_back(pp);
                    rest = std::move(quo);
                    std::vector<int> keep;
                    for (std::size_t c = 0, ci = 0; c < idx.size(); ++c) {
                        if (ci < comb.size() && comb[ci] == c)
                            ++ci;
                        else
                            keep.push_back(idx[c]);
                    }
                    idx = std::move(keep);
                    found = true;
                    break;
                }
            }
            int k = static_cast<int>(size) - 1;
            while (k >= 0 && comb[k] == idx.size() - size + k) --k;
            if (k < 0) break;
            ++comb[k];
            for (std::size_t j = k + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (rest.degree(main) > 0) out.push_back(normalize_mpoly_sign(rest));
    return out;
}

} // namespace

std::vector<MPoly> factor_squarefree_multivar(const MPoly& q, int main) {
    std::vector<int> others;
    for (int v = 0; v < q.nvars; ++v)
        if (v != main && q.degree(v) > 0) others.push_back(v);
    const int k = static_cast<int>(others.size());
    const int dx = q.degree(main);
    int dy_total = 0;
    for (int v : others) dy_total += q.degree(v);
    const int cap = 2 * dy_total + 1;

    auto lc_series_coeffs = mp_coeffs_wrt(q, main);
    const MPoly lc = lc_series_coeffs.back();

    // deterministic spiral search for a good evaluation point
    std::vector<Int> w(k);
    ZPoly u;
    bool found_point = false;
    for (int radius = 0; radius <= 12 && !found_point; ++radius) {
        std::vector<int> t(k, -radius);
        for (;;) {
            int linf = 0;
            for (int v : t) linf = std::max(linf, std::abs(v));
            if (linf == radius) {
                MPoly img = q;
                MPoly lcv = lc;
                for (int j = 0; j < k; ++j) {
                    img = mp_eval(img, others[j], t[j]);
                    lcv = mp_eval(lcv, others[j], t[j]);
                }
                if (!lcv.is_zero()) {
                    ZPoly cand(static_cast<std::size_t>(dx) + 1, 0);
                    for (const auto& [e, c] : img.t) cand[e[main]] = c;
                    zp_trim(cand);
                    if (zp_deg(cand) == dx && zpoly_squarefree(cand)) {
                        for (int j = 0; j < k; ++j) w[j] = t[j];
                        u = std::move(cand);
                        found_point = true;
                        break;
                    }
                }
            }
            int j = 0;
            while (j < k && t[j] == radius) t[j++] = -radius;
            if (j == k) break;
            ++t[j];
        }
    }
    if (!found_point) {
        if (k == 1) return kronecker_bivariate(q, main, others[0]);
        throw std::logic_error("factor_squarefree_multivar: no good evaluation point");
    }

    // factor the univariate image
    ZPoly uprim = u;
    {
        Int c = zp_content(uprim);
        if (uprim.back() < 0) c = -c;
        if (c != 1)
            for (auto& v : uprim) v /= c;
    }
    std::vector<ZPoly> base = zp_factor_squarefree(uprim);
    if (base.size() == 1) return {normalize_mpoly_sign(q)};

    // prime power modulus: p keeps u squarefree and lc(u) invertible;
    // K generous enough that candidate coefficients are recovered exactly
    int p = 0;
    for (int cand : kLiftPrimes) {
        if (u.back() % cand == 0) continue;
        bool ok = true;
        // u squarefree mod p iff gcd(u, u') nonconstant fails; check via
        // resultant-free route: evaluate gcd over Z/p with simple Euclid
        {
            Ring pr{Int(cand)};
            RPoly a(u.size()), b;
            for (std::size_t i = 0; i < u.size(); ++i) a[i] = pr.reduce(u[i]);
            ZPoly du = zp_derivative(u);
            b.resize(du.size());
            for (std::size_t i = 0; i < du.size(); ++i) b[i] = pr.reduce(du[i]);
            rp_trim(a);
            rp_trim(b);
            while (!b.empty()) {
                // make b monic for rp_rem
                Int inv = pr.inv(b.back());
                RPoly bm = b;
                for (auto& cb : bm) cb = pr.mul(cb, inv);
                RPoly r = rp_rem(pr, a, bm);
                a = std::move(b);
                b = std::move(r);
            }
            ok = a.size() == 1;
        }
        if (ok) {
            p = cand;
            break;
        }
    }
    if (p == 0) throw std::logic_error("factor_squarefree_multivar: no usable prime");

    // coefficient-size bound for candidates, in bits
    Int norm1 = 0;
    for (const auto& [e, c] : q.t) norm1 += abs(c);
    Int lcnorm = 0;
    for (const auto& [e, c] : lc.t) lcnorm += abs(c);
    Int wmax = 1;
    for (const auto& v : w) wmax = std::max(wmax, abs(v) + 1);
    long bits = dx + 2 * dy_total + static_cast<long>(msb(norm1 + 1)) +
                static_cast<long>(msb(lcnorm + 1)) +
                2L * dy_total * static_cast<long>(msb(wmax) + 1) + 16;
    Ring R{Int(1)};
    {
        Int target = Int(1) << bits;
        Int m(p);
        while (m < target) m *= p;
        R.m = m;
    }

    // monic base factors mod M and Bezout inverses
    const int r = static_cast<int>(base.size());
    std::vector<RPoly> ubar(r);
    for (int i = 0; i < r; ++i) {
        ubar[i].resize(base[i].size());
        Int inv = R.inv(R.reduce(base[i].back()));
        for (std::size_t j = 0; j < base[i].size(); ++j)
            ubar[i][j] = R.mul(R.reduce(base[i][j]), inv);
    }
    std::vector<RPoly> bezout(r);
    {
        Ring Fp{Int(p)};
        for (int i = 0; i < r; ++i) {
            RPoly prod{1};
            for (int j = 0; j < r; ++j)
                if (j != i) {
                    RPoly uj(ubar[j].size());
                    for (std::size_t t2 = 0; t2 < uj.size(); ++t2) uj[t2] = Fp.reduce(ubar[j][t2]);
                    RPoly ui(ubar[i].size());
                    for (std::size_t t2 = 0; t2 < ui.size(); ++t2) ui[t2] = Fp.reduce(ubar[i][t2]);
                    prod = rp_rem(Fp, rp_mul(Fp, prod, uj), ui);
                }
            // invert prod mod ubar[i] over F_p by extended Euclid
            RPoly ui(ubar[i].size());
            for (std::size_t t2 = 0; t2 < ui.size(); ++t2) ui[t2] = Fp.reduce(ubar[i][t2]);
            RPoly r0 = ui, r1 = prod, s0, s1{1};
            while (!r1.empty()) {
                // division r0 = q r1 + r2 over F_p
                RPoly quo(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
                RPoly rem = r0;
                Int linv = Fp.inv(r1.back());
                while (rem.size() >= r1.size() && !rem.empty()) {
                    Int qc = Fp.mul(rem.back(), linv);
                    std::size_t off = rem.size() - r1.size();
                    quo[off] = qc;
                    for (std::size_t j2 = 0; j2 < r1.size(); ++j2)
                        rem[off + j2] = Fp.reduce(rem[off + j2] - qc * r1[j2]);
                    rp_trim(rem);
                }
                RPoly s2 = rp_sub(Fp, s0, rp_mul(Fp, quo, s1));
                r0 = std::move(r1);
                r1 = std::move(rem);
                s0 = std::move(s1);
                s1 = std::move(s2);
            }
            if (r0.size() != 1) throw std::logic_error("bezout: factors not coprime mod p");
            Int inv0 = Fp.inv(r0[0]);
            for (auto& c : s0) c = Fp.mul(c, inv0);
            rp_trim(s0);
            // Newton-lift the inverse from mod p to mod M against the
            // cofactor product taken mod M
            RPoly prodM{1};
            for (int j = 0; j < r; ++j)
                if (j != i) prodM = rp_rem(R, rp_mul(R, prodM, ubar[j]), ubar[i]);
            RPoly t = s0;
            Int cur(p);
            while (cur < R.m) {
                cur = cur * cur;
                RPoly pt = rp_mul(R, prodM, t);
                RPoly corr = rp_sub(R, RPoly{2}, pt);
                t = rp_rem(R, rp_mul(R, t, corr), ubar[i]);
            }
            bezout[i] = std::move(t);
        }
    }

    // series data: q expanded around w, lc series and its inverse, monic pm
    Series eq = expand_around(R, q, main, others, w, cap);
    MPoly lc_only = lc; // lc as an MPoly on all vars with main-degree 0
    Series ls = expand_around(R, lc_only, main, others, w, cap);
    Series linv = series_inverse_scalar(R, ls, k, cap);
    Series pm = series_mul(R, eq, linv, cap);

    // Hensel lifting order by order
    std::vector<Series> lifted(r);
    Exps zero(k, 0);
    for (int i = 0; i < r; ++i) lifted[i][zero] = ubar[i];
    for (int order = 1; order <= cap; ++order) {
        Series prod = lifted[0];
        for (int i = 1; i < r; ++i) prod = series_mul(R, prod, lifted[i], order);
        // error at this order
        for (const auto& [e, target] : pm) {
            if (weight(e) != order) continue;
            auto it = prod.find(e);
            RPoly err = it == prod.end() ? target : rp_sub(R, target, it->second);
            if (err.empty()) continue;
            for (int i = 0; i < r; ++i) {
                RPoly delta = rp_rem(R, rp_mul(R, err, bezout[i]), ubar[i]);
                if (!delta.empty()) lifted[i][e] = delta;
            }
        }
        // slots present in prod but not pm still need correcting
        for (const auto& [e, val] : prod) {
            if (weight(e) != order || pm.count(e)) continue;
            RPoly err = rp_sub(R, RPoly{}, val);
            if (err.empty()) continue;
            for (int i = 0; i < r; ++i) {
                RPoly delta = rp_rem(R, rp_mul(R, err, bezout[i]), ubar[i]);
                if (!delta.empty()) lifted[i][e] = delta;
            }
        }
    }

    // recombination with exact trial division
    auto series_to_mpoly = [&](const Series& s) {
        MPoly m{q.nvars, {}};
        for (const auto& [e, poly] : s)
            for (std::size_t d = 0; d < poly.size(); ++d) {
                if (poly[d] == 0) continue;
                Exps full(q.nvars, 0);
                full[main] = static_cast<std::int32_t>(d);
                for (int j = 0; j < k; ++j) full[others[j]] = e[j];
                m.add_term(full, R.symmetric(poly[d]));
            }
        return m;
    };

    std::vector<MPoly> out;
    MPoly rest = q;
    Series ls_rest = ls;
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    std::size_t size = 1;
    while (!idx.empty() && size <= idx.size()) {
        std::vector<std::size_t> comb(size);
        std::iota(comb.begin(), comb.end(), 0);
        bool found = false;
        for (;;) {
            Series cs = ls_rest;
            for (auto c : comb) cs = series_mul(R, cs, lifted[idx[c]], cap);
            MPoly shifted = series_to_mpoly(cs);
            // substitute s_j = var_j - w_j back
            for (int j = 0; j < k; ++j)
                if (w[j] != 0) shifted = mp_shift_var(shifted, others[j], -w[j]);
            MPoly quo;
            bool hit = false;
            if (!shifted.is_zero()) {
                MPoly cand = primitive_part(shifted, main);
                if (cand.degree(main) > 0 && mp_divide(rest, cand, quo)) {
                    out.push_back(cand);
                    rest = std::move(quo);
                    hit = true;
                }
            }
            if (hit) {
                std::vector<int> keep;
                for (std::size_t c = 0, ci = 0; c < idx.size(); ++c) {
                    if (ci < comb.size() && comb[ci] == c)
                        ++ci;
                    else
                        keep.push_back(idx[c]);
                }
                idx = std::move(keep);
                ls_rest = expand_around(R, mp_coeffs_wrt(rest, main).back(), main, others, w, cap);
                found = true;
                break;
            }
            int kk = static_cast<int>(size) - 1;
            while (kk >= 0 && comb[kk] == idx.size() - size + kk) --kk;
            if (kk < 0) break;
            ++comb[kk];
            for (std::size_t j = kk + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (rest.degree(main) > 0) out.push_back(normalize_mpoly_sign(rest));
    return out;
}

} // namespace cyltor::detail
