#pragma once

#include "cyltor/aut_star.hpp"
#include "cyltor/factor.hpp"
#include "cyltor/laurent.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cyltor {

/// Unit: classes and duality taken up to +-h only (the Torelli quotient by
/// N). Sim: classes taken up to the Aut*(H) action as well (the quotient by
/// AN); semi-decidable, bounded by a search depth.
enum class EquivalenceMode { Unit, Sim };

/// Sum of exponents over irreducible factors of p equivalent to lambda.
/// Throws inconclusive_error in Sim mode when a factor cannot be classified
/// within the search depth.
int e_lambda(const LaurentFraction& p, const LaurentPolynomial& lambda, EquivalenceMode mode,
             int depth = 4);

/// Psi_lambda: e_lambda mod 2. lambda must be certified self-dual in the
/// given mode.
int psi(const LaurentFraction& p, const LaurentPolynomial& lambda,
        EquivalenceMode mode = EquivalenceMode::Sim, int depth = 4);

/// Theta_mu: e_mu(p) - e_mubar(p). mu must be certified non-self-dual in the
/// given mode (Theta of a self-dual class is identically zero and rejected).
int theta(const LaurentFraction& p, const LaurentPolynomial& mu,
          EquivalenceMode mode = EquivalenceMode::Sim, int depth = 4);

/// Membership in the norm subgroup N(H) = {+-h q qbar}: every
/// +-h-self-conjugate factor class must have even exponent and every other
/// class must balance its conjugate.
ThreeValued norm_membership(const LaurentFraction& p);

/// Fox-Milnor obstruction: norm_membership(tau_M / tau_N). "No" certifies
/// that the two cylinders are not homology cobordant.
ThreeValued fox_milnor_check(const LaurentFraction& tau_m, const LaurentFraction& tau_n);

struct ProfileComponent {
    UnitClass cls; // canonical class key (pair-oriented for theta)
    int value;
};

struct ResidualEntry {
    UnitClass cls;
    int exponent;
    std::string reason;
};

/// All nonzero Psi and Theta components of p, plus the factor classes whose
/// self-duality status is unknown at the configured depth.
struct InvariantProfile {
    EquivalenceMode mode;
    int depth;
    std::vector<ProfileComponent> psi_components;
    std::vector<ProfileComponent> theta_components;
    std::vector<ResidualEntry> residual;

    bool all_zero() const {
        return psi_components.empty() && theta_components.empty() && residual.empty();
    }
};

InvariantProfile invariant_profile(const LaurentFraction& p,
                                   EquivalenceMode mode = EquivalenceMode::Sim, int depth = 4);

struct MahlerEstimate {
    double log_value;
    double log_std_error; // 0 for the exact root-based path
    int samples;          // 0 for the exact path
    bool exact;

    double value() const;
};

/// Mahler measure: root products for (effectively) univariate input,
/// quasi-Monte-Carlo torus averaging of log|p| otherwise. Deterministic for
/// a fixed seed.
MahlerEstimate mahler_measure(const LaurentPolynomial& p, int samples = 1 << 16,
                              std::uint64_t seed = 0);

} // namespace cyltor
