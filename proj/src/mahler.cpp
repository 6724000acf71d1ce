#include "convert.hpp"
#include "cyltor/intmat.hpp"
#include "cyltor/torsion.hpp"
#include "mpoly.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cyltor {

namespace {

using Complex = std::complex<long double>;

// Durand-Kerner on a squarefree monic polynomial given by exact integer
// coefficients (scaled by the leading one).
std::vector<Complex> roots_squarefree(const std::vector<double>& monic) {
    int d = static_cast<int>(monic.size()) - 1;
    std::vector<Complex> z(d);
    Complex seed(0.4L, 0.9L);
    Complex acc(1.0L, 0.0L);
    for (int i = 0; i < d; ++i) {
        acc *= seed;
        z[i] = acc;
    }
    auto eval = [&](Complex x) {
        Complex v(monic[d], 0.0L);
        for (int i = d - 1; i >= 0; --i) v = v * x + Complex(monic[i], 0.0L);
        return v;
    };
    for (int iter = 0; iter < 500; ++iter) {
        long double moved = 0;
        for (int i = 0; i < d; ++i) {
            Complex denom(1.0L, 0.0L);
            for (int j = 0; j < d; ++j)
                if (j != i) denom *= z[i] - z[j];
            Complex delta = eval(z[i]) / denom;
            z[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-16L) break;
    }
    return z;
}

// Exact Mahler measure of a one-variable integer polynomial (coefficients by
// ascending degree, trailing coefficient nonzero), via the squarefree parts.
double mahler_univariate_log(const std::vector<Int>& coeffs) {
    using namespace detail;
    MPoly f{1, {}};
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) f.t.emplace(Exps{static_cast<std::int32_t>(i)}, coeffs[i]);
    Int content = mp_int_content(f);
    double logm = std::log(std::abs(content.convert_to<double>()));
    f = mp_div_int(f, content);
    for (const auto& [q, mult] : mp_squarefree_wrt(f, 0)) {
        int d = q.degree(0);
        std::vector<double> c(d + 1, 0.0);
        for (const auto& [e, v] : q.t) c[e[0]] = v.convert_to<double>();
        double lc = c[d];
        std::vector<double> monic(d + 1);
        for (int i = 0; i <= d; ++i) monic[i] = c[i] / lc;
        double part = std::log(std::fabs(lc));
        if (d > 0)
            for (const Complex& z : roots_squarefree(monic)) {
                long double a = std::abs(z);
                if (a > 1.0L) part += static_cast<double>(std::log(a));
            }
        logm += mult * part;
    }
    return logm;
}

} // namespace

double MahlerEstimate::value() const { return std::exp(log_value); }

MahlerEstimate mahler_measure(const LaurentPolynomial& p, int samples, std::uint64_t seed) {
    if (p.is_zero()) throw std::domain_error("mahler_measure: zero input");
    if (p.term_count() == 1) {
        // monomials are units: m = |coefficient|
        double lv = std::log(std::fabs(p.terms().begin()->second.convert_to<double>()));
        return MahlerEstimate{lv, 0.0, 0, true};
    }

    // Support-lattice reduction: measure is invariant under units and under
    // monomial substitutions along a primitive direction, so rank-1 support
    // reduces to the exact univariate root formula.
    const ExponentVector base = p.terms().begin()->first;
    int rank = p.signature().rank();
    IntMatrix diffs(static_cast<int>(p.term_count()) - 1, rank);
    {
        int row = 0;
        for (auto it = std::next(p.terms().begin()); it != p.terms().end(); ++it, ++row)
            for (int j = 0; j < rank; ++j) diffs.at(row, j) = it->first[j] - base[j];
    }
    IntMatrix lattice = saturate_rows(diffs);
    if (lattice.rows() == 1) {
        IntMatrix lattice_t = lattice.transposed();
        std::vector<Int> rhs(rank), coord;
        std::int64_t minc = 0;
        std::vector<std::pair<std::int64_t, Int>> univ;
        for (const auto& [e, c] : p.terms()) {
            for (int j = 0; j < rank; ++j) rhs[j] = e[j] - base[j];
            if (!solve_integer(lattice_t, rhs, coord))
                throw std::logic_error("mahler: lattice coordinates must be integral");
            std::int64_t k = coord[0].convert_to<std::int64_t>();
            minc = std::min(minc, k);
            univ.emplace_back(k, c);
        }
        std::int64_t maxc = 0;
        for (auto& [k, c] : univ) {
            k -= minc;
            maxc = std::max(maxc, k);
        }
        std::vector<Int> coeffs(maxc + 1, 0);
        for (const auto& [k, c] : univ) coeffs[k] = c;
        return MahlerEstimate{mahler_univariate_log(coeffs), 0.0, 0, true};
    }

    // Quasi-Monte-Carlo average of log|p| over the unit torus with a
    // Kronecker (additive recurrence) low-discrepancy sequence; block means
    // give the reported standard error.
    // fractional parts of sqrt(2), sqrt(3), ...: badly approximable directions
    static const double kAlphas[] = {0.4142135623730951, 0.7320508075688772, 0.2360679774997896,
                                     0.6457513110645906, 0.3166247903553998, 0.6055512754639893,
                                     0.1231056256176605, 0.3588989435406736};
    std::vector<int> active;
    for (int j = 0; j < rank; ++j) {
        bool used = false;
        for (const auto& [e, c] : p.terms())
            if (e[j] != base[j]) used = true;
        if (used) active.push_back(j);
    }
    const int k = static_cast<int>(active.size());
    std::vector<double> offset(k);
    std::uint64_t st = seed + 0x9e3779b97f4a7c15ull;
    for (int j = 0; j < k; ++j) {
        st ^= st >> 12;
        st ^= st << 25;
        st ^= st >> 27;
        offset[j] = static_cast<double>(st * 0x2545f4914f6cdd1dull >> 11) / 9007199254740992.0;
    }

    const int blocks = 64;
    const int per_block = std::max(1, samples / blocks);
    std::vector<double> block_mean(blocks, 0.0);
    std::vector<double> angles(k);
    long t = 0;
    for (int b = 0; b < blocks; ++b) {
        double acc = 0.0;
        for (int s = 0; s < per_block; ++s, ++t) {
            for (int j = 0; j < k; ++j) {
                double a = offset[j] + static_cast<double>(t + 1) * kAlphas[j % 8];
                angles[j] = a - std::floor(a);
            }
            std::complex<double> v(0.0, 0.0);
            for (const auto& [e, c] : p.terms()) {
                double phase = 0.0;
                for (int j = 0; j < k; ++j) phase += angles[j] * static_cast<double>(e[active[j]]);
                phase -= std::floor(phase);
                double arg = 2.0 * std::numbers::pi * phase;
                v += c.convert_to<double>() * std::complex<double>(std::cos(arg), std::sin(arg));
            }
            double mag = std::abs(v);
            acc += std::log(std::max(mag, 1e-300));
        }
        block_mean[b] = acc / per_block;
    }
    double mean = 0.0;
    for (double m : block_mean) mean += m;
    mean /= blocks;
    double var = 0.0;
    for (double m : block_mean) var += (m - mean) * (m - mean);
    var /= (blocks - 1);
    double se = std::sqrt(var / blocks);
    return MahlerEstimate{mean, se, blocks * per_block, false};
}

} // namespace cyltor
