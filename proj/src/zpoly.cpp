#include "zpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>

namespace cyltor::detail {

void zp_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zp_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    zp_trim(r);
    return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zp_trim(r);
    return r;
}

bool zp_divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quo) {
    if (b.empty()) throw std::domain_error("zp_divide_exact: zero divisor");
    quo.clear();
    if (a.empty()) return true;
    if (a.size() < b.size()) return false;
    ZPoly r = a;
    quo.assign(a.size() - b.size() + 1, 0);
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
        Int& top = r[k + b.size() - 1];
        if (top % b.back() != 0) return false;
        Int q = top / b.back();
        quo[k] = q;
        if (q != 0)
            for (std::size_t i = 0; i < b.size(); ++i) r[k + i] -= q * b[i];
    }
    for (const Int& c : r)
        if (c != 0) return false;
    return true;
}

Int zp_content(const ZPoly& f) {
    Int g = 0;
    for (const Int& c : f) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

ZPoly zp_derivative(const ZPoly& f) {
    ZPoly r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<int>(i));
    zp_trim(r);
    return r;
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for word-sized odd primes.

namespace {

using u64 = std::uint64_t;

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const {
        return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
    }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

using FpPoly = std::vector<u64>;

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fp_mul(const Fp& F, const FpPoly& a, const FpPoly& b) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    fp_trim(r);
    return r;
}

// remainder of a modulo monic-ish b (b need not be monic)
FpPoly fp_rem(const Fp& F, FpPoly a, const FpPoly& b) {
    fp_trim(a);
    u64 binv = F.inv(b.back());
    while (fp_deg(a) >= fp_deg(b)) {
        u64 q = F.mul(a.back(), binv);
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = F.sub(a[off + i], F.mul(q, b[i]));
        fp_trim(a);
    }
    return a;
}

FpPoly fp_divexact(const Fp& F, FpPoly a, const FpPoly& b) {
    FpPoly quo(a.size() - b.size() + 1, 0);
    u64 binv = F.inv(b.back());
    while (fp_deg(a) >= fp_deg(b)) {
        u64 q = F.mul(a.back(), binv);
        std::size_t off = a.size() - b.size();
        quo[off] = q;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = F.sub(a[off + i], F.mul(q, b[i]));
        fp_trim(a);
    }
    return quo;
}

FpPoly fp_gcd(const Fp& F, FpPoly a, FpPoly b) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv = F.inv(a.back());
        for (auto& c : a) c = F.mul(c, inv);
    }
    return a;
}

FpPoly fp_monic(const Fp& F, FpPoly a) {
    if (a.empty()) return a;
    u64 inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
    return a;
}

FpPoly fp_mulmod(const Fp& F, const FpPoly& a, const FpPoly& b, const FpPoly& m) {
    return fp_rem(F, fp_mul(F, a, b), m);
}

FpPoly fp_powmod(const Fp& F, FpPoly base, Int e, const FpPoly& m) {
    FpPoly r{1};
    base = fp_rem(F, std::move(base), m);
    while (e > 0) {
        if ((e & 1) != 0) r = fp_mulmod(F, r, base, m);
        base = fp_mulmod(F, base, base, m);
        e >>= 1;
    }
    return r;
}

// extended gcd: returns g and s with s*a = g mod m (g monic), used for the
// Bezout inverses in Hensel lifting
FpPoly fp_invmod(const Fp& F, const FpPoly& a, const FpPoly& m) {
    // standard iterative extended Euclid in F_p[x]
    FpPoly r0 = m, r1 = fp_rem(F, a, m);
    FpPoly s0{}, s1{1};
    while (!r1.empty()) {
        FpPoly q = fp_divexact(F, r0, r1);
        FpPoly r2 = fp_rem(F, r0, r1);
        FpPoly s2 = s0;
        // s2 = s0 - q*s1
        FpPoly qs = fp_mul(F, q, s1);
        if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = F.sub(s2[i], qs[i]);
        fp_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (fp_deg(r0) != 0) throw std::domain_error("fp_invmod: not invertible");
    u64 inv = F.inv(r0[0]);
    for (auto& c : s0) c = F.mul(c, inv);
    fp_trim(s0);
    return fp_rem(F, s0, m);
}

// Cantor-Zassenhaus equal-degree splitting; rng is deterministic per call
// site so factorizations are reproducible.
void fp_equal_degree(const Fp& F, const FpPoly& f, int d, std::mt19937_64& rng,
                     std::vector<FpPoly>& out) {
    if (fp_deg(f) == d) {
        out.push_back(fp_monic(F, f));
        return;
    }
    Int e = (pow(Int(F.p), d) - 1) / 2;
    for (;;) {
        FpPoly r(fp_deg(f));
        for (auto& c : r) c = rng() % F.p;
        fp_trim(r);
        if (fp_deg(r) < 1) continue;
        FpPoly g = fp_gcd(F, r, f);
        if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(f)) {
            fp_equal_degree(F, g, d, rng, out);
            fp_equal_degree(F, fp_divexact(F, f, g), d, rng, out);
            return;
        }
        FpPoly h = fp_powmod(F, r, e, f);
        if (h.empty()) continue;
        h[0] = F.sub(h[0], 1);
        fp_trim(h);
        g = fp_gcd(F, h, f);
        if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(f)) {
            fp_equal_degree(F, g, d, rng, out);
            fp_equal_degree(F, fp_divexact(F, f, g), d, rng, out);
            return;
        }
    }
}

// Full factorization of a squarefree monic polynomial mod p.
std::vector<FpPoly> fp_factor_squarefree(const Fp& F, FpPoly f, std::uint64_t seed) {
    std::vector<FpPoly> out;
    std::mt19937_64 rng(seed);
    FpPoly x{0, 1};
    FpPoly h = x;
    int d = 0;
    while (fp_deg(f) > 0) {
        ++d;
        if (2 * d > fp_deg(f)) {
            out.push_back(fp_monic(F, f));
            break;
        }
        h = fp_powmod(F, h, Int(F.p), f);
        FpPoly hx = h;
        // h - x
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = F.sub(hx[1], 1);
        fp_trim(hx);
        FpPoly g = fp_gcd(F, hx, f);
        if (fp_deg(g) > 0) {
            fp_equal_degree(F, g, d, rng, out);
            f = fp_divexact(F, f, g);
            h = fp_rem(F, h, f);
        }
    }
    return out;
}

u64 to_fp(const Int& c, u64 p) {
    Int r = c % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return r.convert_to<u64>();
}

FpPoly to_fp_poly(const ZPoly& f, u64 p) {
    FpPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = to_fp(f[i], p);
    fp_trim(r);
    return r;
}

// symmetric representative in (-m/2, m/2]
Int symmetric(const Int& c, const Int& m) {
    Int r = c % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

std::uint64_t zp_hash(const ZPoly& f) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (const Int& c : f) {
        std::uint64_t v = (c % 1000003).convert_to<long long>() & 0xffffffffull;
        h = h * 0x100000001b3ull + v + 17;
    }
    return h;
}

const int kPrimeList[] = {5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                          67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131};

// Landau-Mignotte style coefficient bound for monic factors of monic fm.
Int factor_bound(const ZPoly& fm) {
    Int norm2sq = 0;
    for (const Int& c : fm) norm2sq += c * c;
    Int norm = sqrt(norm2sq) + 1;
    return (Int(1) << (fm.size())) * norm;
}

struct ModularImage {
    u64 p;
    std::vector<FpPoly> factors;
};

// Choose a prime where the monic polynomial stays squarefree, preferring the
// image with the fewest factors among the first few usable primes.
bool select_prime(const ZPoly& fm, ModularImage& best, int max_tries = 3) {
    int found = 0;
    bool have = false;
    for (int p : kPrimeList) {
        Fp F{static_cast<u64>(p)};
        FpPoly f = to_fp_poly(fm, F.p);
        if (fp_deg(f) != zp_deg(fm)) continue;
        FpPoly g = fp_gcd(F, f, to_fp_poly(zp_derivative(fm), F.p));
        if (fp_deg(g) != 0) continue;
        auto factors = fp_factor_squarefree(F, fp_monic(F, f), zp_hash(fm) ^ (0x5bd1ull * p));
        if (!have || factors.size() < best.factors.size()) {
            best = ModularImage{F.p, std::move(factors)};
            have = true;
        }
        if (best.factors.size() == 1) return true;
        if (++found >= max_tries) break;
    }
    return have;
}

// Linear multifactor Hensel lifting of the monic factorization of monic fm
// from mod p to mod p^K >= target.
std::vector<ZPoly> hensel_lift(const ZPoly& fm, const ModularImage& img, const Int& target,
                               Int& modulus) {
    Fp F{img.p};
    int r = static_cast<int>(img.factors.size());
    // Bezout inverses: T_i = (prod_{j != i} f_j)^{-1} mod f_i over F_p
    std::vector<FpPoly> T(r);
    for (int i = 0; i < r; ++i) {
        FpPoly prod{1};
        for (int j = 0; j < r; ++j)
            if (j != i) prod = fp_mulmod(F, prod, img.factors[j], img.factors[i]);
        T[i] = fp_invmod(F, prod, img.factors[i]);
    }
    std::vector<ZPoly> lifted(r);
    for (int i = 0; i < r; ++i) {
        lifted[i].assign(img.factors[i].size(), 0);
        for (std::size_t k = 0; k < img.factors[i].size(); ++k) lifted[i][k] = img.factors[i][k];
    }
    Int pk(img.p);
    Int p(img.p);
    while (pk < target) {
        // error = (fm - prod lifted) / p^k mod p
        ZPoly prod{1};
        for (const auto& g : lifted) prod = zp_mul(prod, g);
        ZPoly err = zp_sub(fm, prod);
        FpPoly e(err.size());
        for (std::size_t i = 0; i < err.size(); ++i) {
            Int q = err[i] / pk;
            e[i] = to_fp(q, F.p);
        }
        fp_trim(e);
        for (int i = 0; i < r; ++i) {
            if (e.empty()) break;
            FpPoly delta = fp_mulmod(F, e, T[i], img.factors[i]);
            for (std::size_t k = 0; k < delta.size(); ++k) lifted[i][k] += pk * delta[k];
        }
        pk *= p;
    }
    // reduce to symmetric representatives
    for (auto& g : lifted)
        for (auto& c : g) c = symmetric(c, pk);
    for (int i = 0; i < r; ++i) lifted[i].back() = 1; // monic by construction
    modulus = pk;
    return lifted;
}

ZPoly primitive_positive(ZPoly f) {
    Int c = zp_content(f);
    if (c != 0 && c != 1)
        for (auto& v : f) v /= c;
    if (!f.empty() && f.back() < 0)
        for (auto& v : f) v = -v;
    return f;
}

// Map a monic factor C(y) of fm(y) = lc^(d-1) f(y/lc) back to a primitive
// factor of f.
ZPoly unmonicize(const ZPoly& c, const Int& lc) {
    ZPoly g = c;
    Int power = 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::size_t k = g.size() - 1 - i;
        g[k] *= power;
        power *= lc;
    }
    return primitive_positive(std::move(g));
}

// Zassenhaus subset recombination over the lifted factors of monic fm.
std::vector<ZPoly> recombine(ZPoly fm, std::vector<ZPoly> pool, const Int& modulus,
                             const Int& lc) {
    std::vector<ZPoly> out;
    std::vector<int> idx(pool.size());
    std::iota(idx.begin(), idx.end(), 0);

    auto subset_product = [&](const std::vector<int>& sel) {
        ZPoly prod{1};
        for (int i : sel) prod = zp_mul(prod, pool[i]);
        for (auto& c : prod) c = symmetric(c, modulus);
        return prod;
    };

    std::size_t size = 1;
    while (idx.size() > 0 && size <= idx.size() / 2) {
        // iterate combinations of `size` indices out of idx, lexicographic
        std::vector<std::size_t> comb(size);
        std::iota(comb.begin(), comb.end(), 0);
        bool found = false;
        for (;;) {
            std::vector<int> sel;
            sel.reserve(size);
            for (auto c : comb) sel.push_back(idx[c]);
            ZPoly cand = subset_product(sel);
            ZPoly quo;
            if (zp_divide_exact(fm, cand, quo)) {
                out.push_back(unmonicize(cand, lc));
                fm = std::move(quo);
                std::vector<int> rest;
                for (int i : idx)
                    if (std::find(sel.begin(), sel.end(), i) == sel.end()) rest.push_back(i);
                idx = std::move(rest);
                found = true;
                break;
            }
            // next combination
            int k = static_cast<int>(size) - 1;
            while (k >= 0 && comb[k] == idx.size() - size + k) --k;
            if (k < 0) break;
            ++comb[k];
            for (std::size_t j = k + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (zp_deg(fm) > 0) out.push_back(unmonicize(fm, lc));
    return out;
}

// Quadratic: reducible over Q iff the discriminant is a perfect square.
bool quadratic_split(const ZPoly& f, std::vector<ZPoly>& out) {
    const Int &a = f[2], &b = f[1], &c = f[0];
    Int disc = b * b - 4 * a * c;
    Int root;
    if (!perfect_square(disc, root)) {
        out.push_back(f);
        return true;
    }
    // rational roots (-b +- root) / 2a
    for (int s : {1, -1}) {
        Int num = -b + s * root;
        Int den = 2 * a;
        Int g = int_gcd(num, den);
        if (g != 0) {
            num /= g;
            den /= g;
        }
        if (den < 0) {
            den = -den;
            num = -num;
        }
        ZPoly lin{-num, den};
        ZPoly quo;
        if (zp_divide_exact(f, lin, quo)) {
            out.push_back(primitive_positive(lin));
            out.push_back(primitive_positive(quo));
            return true;
        }
    }
    return false; // fall through to the general engine
}

} // namespace

std::vector<ZPoly> zp_factor_squarefree(const ZPoly& f) {
    int d = zp_deg(f);
    if (d <= 0) throw std::domain_error("zp_factor_squarefree: degree < 1");
    if (d == 1) return {f};
    if (d == 2) {
        std::vector<ZPoly> out;
        if (quadratic_split(f, out)) return out;
    }
    // monicize: fm(y) = lc^(d-1) f(y/lc)
    const Int lc = f.back();
    ZPoly fm(f.size());
    Int power = 1;
    for (int i = d; i >= 0; --i) {
        fm[i] = f[i] * power;
        if (i > 0) power *= lc;
    }
    ModularImage img;
    if (!select_prime(fm, img)) throw std::logic_error("no usable prime found");
    if (img.factors.size() == 1) return {f};
    Int bound = 2 * factor_bound(fm) + 1;
    Int modulus;
    std::vector<ZPoly> lifted = hensel_lift(fm, img, bound, modulus);
    auto factors = recombine(fm, std::move(lifted), modulus, lc);
    std::sort(factors.begin(), factors.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return factors;
}

} // namespace cyltor::detail
