#include "cyltor/surface.hpp"

#include <stdexcept>

namespace cyltor {

ExponentVector ev_zero(const SurfaceSignature& sig) {
    return ExponentVector(static_cast<std::size_t>(sig.rank()), 0);
}

ExponentVector ev_add(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent vector length mismatch");
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExponentVector ev_neg(const ExponentVector& a) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool ev_is_zero(const ExponentVector& a) {
    for (auto v : a)
        if (v != 0) return false;
    return true;
}

std::string variable_name(const SurfaceSignature& sig, int index) {
    int nb = sig.boundary_rank();
    if (index < 0 || index >= sig.rank()) throw std::out_of_range("variable index");
    if (index < nb) return "x" + std::to_string(index + 1);
    return "y" + std::to_string(index - nb + 1);
}

} // namespace cyltor
