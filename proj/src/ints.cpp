#include "cyltor/ints.hpp"

#include <algorithm>
#include <map>

namespace cyltor {

bool perfect_square(const Int& n, Int& r) {
    if (n < 0) return false;
    if (n == 0) {
        r = 0;
        return true;
    }
    r = sqrt(n);
    // boost sqrt is the integer floor; adjust against rounding at the edge
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

namespace {

Int pow_mod(Int base, Int exp, const Int& mod) {
    Int result = 1;
    base %= mod;
    while (exp > 0) {
        if ((exp & 1) != 0) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, int s) {
    Int x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is a proven deterministic test below 3.3e24.
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

namespace {

Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = int_gcd(x >= y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(Int n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<std::pair<Int, int>> factor_integer(Int n) {
    if (n < 0) n = -n;
    if (n <= 1) return {};
    std::map<Int, int> acc;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        while (n % p == 0) {
            ++acc[p];
            n /= p;
        }
    }
    factor_rec(n, acc);
    return {acc.begin(), acc.end()};
}

} // namespace cyltor
