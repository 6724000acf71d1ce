#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cyltor {

// Exact coefficient arithmetic. Factorization and Fox determinants
// overflow fixed width quickly, so everything is arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Int int_lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int l = (a / int_gcd(a, b)) * b;
    return l < 0 ? -l : l;
}

/// Exact integer square root test; returns true and sets r when n = r^2.
bool perfect_square(const Int& n, Int& r);

/// Deterministic Miller-Rabin, valid for all inputs we meet at desk scale.
bool is_prime(const Int& n);

/// Prime factorization by trial division plus Pollard rho.
/// Returns (prime, multiplicity) pairs, primes ascending.
std::vector<std::pair<Int, int>> factor_integer(Int n);

/// Raised when a semi-decidable classification cannot be completed at the
/// configured search depth.
class inconclusive_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cyltor
