#include "cyltor/torsion.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cyltor {

namespace {

UnitClass class_of(const LaurentPolynomial& p) { return normalize_unit(p).cls; }

UnitClass conjugate_class(const UnitClass& cls) { return class_of(involute(cls.rep())); }

void require_irreducible(const LaurentPolynomial& lambda, const char* who) {
    if (!is_irreducible(lambda))
        throw std::invalid_argument(std::string(who) + ": lambda is not irreducible");
}

// Sim-mode equivalence of two irreducible classes; throws inconclusive_error
// when neither a distinctness certificate nor a witness exists within depth.
bool sim_equivalent(const UnitClass& a, const UnitClass& b, int depth) {
    if (a == b) return true;
    if (certify_distinct(a.rep(), b.rep())) return false;
    if (certify_equivalent(a.rep(), b.rep(), depth)) return true;
    std::ostringstream msg;
    msg << "cannot classify factor up to Aut*-equivalence at depth " << depth;
    throw inconclusive_error(msg.str());
}

} // namespace

int e_lambda(const LaurentFraction& p, const LaurentPolynomial& lambda, EquivalenceMode mode,
             int depth) {
    require_irreducible(lambda, "e_lambda");
    UnitClass target = class_of(lambda);
    int total = 0;
    for (const auto& [cls, exp] : factor(p).factors) {
        if (mode == EquivalenceMode::Unit) {
            if (cls == target) total += exp;
        } else {
            if (sim_equivalent(cls, target, depth)) total += exp;
        }
    }
    return total;
}

int psi(const LaurentFraction& p, const LaurentPolynomial& lambda, EquivalenceMode mode,
        int depth) {
    require_irreducible(lambda, "psi");
    if (mode == EquivalenceMode::Unit) {
        if (!eq_up_to_unit(lambda, involute(lambda)))
            throw std::invalid_argument("psi: lambda is not self-dual (unit mode)");
    } else {
        if (is_self_dual_semidecide(lambda, depth) != ThreeValued::Yes)
            throw std::invalid_argument("psi: lambda is not certified self-dual");
    }
    int e = e_lambda(p, lambda, mode, depth);
    return ((e % 2) + 2) % 2;
}

int theta(const LaurentFraction& p, const LaurentPolynomial& mu, EquivalenceMode mode,
          int depth) {
    require_irreducible(mu, "theta");
    LaurentPolynomial mubar = involute(mu);
    if (mode == EquivalenceMode::Unit) {
        if (eq_up_to_unit(mu, mubar))
            throw std::invalid_argument("theta: mu is self-dual, Theta_mu is identically zero");
    } else {
        ThreeValued sd = is_self_dual_semidecide(mu, depth);
        if (sd == ThreeValued::Yes)
            throw std::invalid_argument("theta: mu is self-dual, Theta_mu is identically zero");
        if (sd == ThreeValued::Unknown)
            throw inconclusive_error("theta: self-duality of mu is unresolved at this depth");
    }
    return e_lambda(p, mu, mode, depth) - e_lambda(p, mubar, mode, depth);
}

ThreeValued norm_membership(const LaurentFraction& p) {
    PairingReport report = conjugate_pairing(factor(p));
    // The residual after pairing is +-h, and both signs are norms, so the
    // parity bookkeeping always closes.
    return (report.all_balanced && report.self_conjugate_even) ? ThreeValued::Yes
                                                               : ThreeValued::No;
}

ThreeValued fox_milnor_check(const LaurentFraction& tau_m, const LaurentFraction& tau_n) {
    return norm_membership(tau_m / tau_n);
}

InvariantProfile invariant_profile(const LaurentFraction& p, EquivalenceMode mode, int depth) {
    InvariantProfile out;
    out.mode = mode;
    out.depth = depth;
    Factorization f = factor(p);

    struct Cluster {
        UnitClass rep; // minimal representative
        int exponent;
    };
    std::vector<Cluster> clusters;

    if (mode == EquivalenceMode::Unit) {
        for (const auto& [cls, exp] : f.factors) clusters.push_back({cls, exp});
    } else {
        for (const auto& [cls, exp] : f.factors) {
            bool merged = false;
            bool unresolved = false;
            for (auto& c : clusters) {
                try {
                    if (sim_equivalent(c.rep, cls, depth)) {
                        c.exponent += exp;
                        if (cls < c.rep) c.rep = cls;
                        merged = true;
                        break;
                    }
                } catch (const inconclusive_error&) {
                    unresolved = true;
                }
            }
            if (merged) continue;
            if (unresolved) {
                out.residual.push_back({cls, exp, "Aut*-classification inconclusive"});
            } else {
                clusters.push_back({cls, exp});
            }
        }
    }

    std::vector<bool> used(clusters.size(), false);
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        const UnitClass& cls = clusters[i].rep;
        UnitClass conj = conjugate_class(cls);

        bool self_dual;
        if (mode == EquivalenceMode::Unit) {
            self_dual = conj == cls;
        } else {
            ThreeValued sd = is_self_dual_semidecide(cls.rep(), depth);
            if (sd == ThreeValued::Unknown) {
                out.residual.push_back(
                    {cls, clusters[i].exponent, "self-duality unresolved"});
                continue;
            }
            self_dual = sd == ThreeValued::Yes;
        }

        if (self_dual) {
            int bit = ((clusters[i].exponent % 2) + 2) % 2;
            if (bit != 0) out.psi_components.push_back({cls, bit});
            continue;
        }

        // locate the conjugate cluster, if present
        int conj_exp = 0;
        UnitClass conj_rep = conj;
        for (std::size_t j = 0; j < clusters.size(); ++j) {
            if (j == i || used[j]) continue;
            bool same;
            if (mode == EquivalenceMode::Unit) {
                same = clusters[j].rep == conj;
            } else {
                try {
                    same = sim_equivalent(clusters[j].rep, conj, depth);
                } catch (const inconclusive_error&) {
                    same = false;
                }
            }
            if (same) {
                used[j] = true;
                conj_exp = clusters[j].exponent;
                if (clusters[j].rep < conj_rep) conj_rep = clusters[j].rep;
                break;
            }
        }
        // orientation: the smaller representative in the global term order is
        // the positive direction of the pair
        int value = clusters[i].exponent - conj_exp;
        UnitClass key = cls;
        if (conj_rep < cls) {
            key = conj_rep;
            value = -value;
        }
        if (value != 0) out.theta_components.push_back({key, value});
    }

    auto by_cls = [](const ProfileComponent& a, const ProfileComponent& b) {
        return a.cls < b.cls;
    };
    std::sort(out.psi_components.begin(), out.psi_components.end(), by_cls);
    std::sort(out.theta_components.begin(), out.theta_components.end(), by_cls);
    return out;
}

} // namespace cyltor
