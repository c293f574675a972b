#include "bidisc/point.hpp"

#include <cmath>
#include <string>

namespace bidisc {

void require_interior(const BidiscPoint& p, const char* where) {
    if (!std::isfinite(std::abs(p.l1)) || !std::isfinite(std::abs(p.l2)))
        throw InvalidInput(std::string(where) + ": non-finite point");
    if (!p.interior()) throw DomainError(std::string(where) + ": point not in the open bidisc");
}

void require_torus(const TorusPoint& t, const char* where, double slack) {
    if (std::abs(std::abs(t.l1) - 1.0) > slack || std::abs(std::abs(t.l2) - 1.0) > slack)
        throw InvalidInput(std::string(where) + ": point not on the torus");
}

TorusPoint normalize_torus(const TorusPoint& t, double slack) {
    require_torus(t, "normalize_torus", slack);
    return {t.l1 / std::abs(t.l1), t.l2 / std::abs(t.l2)};
}

bool in_H(const TorusPoint& tau, const Direction& d) {
    return (std::conj(tau.l1) * d.d1).real() > 0.0 && (std::conj(tau.l2) * d.d2).real() > 0.0;
}

void require_in_H(const TorusPoint& tau, const Direction& d, const char* where) {
    if (!in_H(tau, d))
        throw InvalidInput(std::string(where) + ": direction must satisfy Re(conj(tau_j) delta_j) > 0");
}

} // namespace bidisc
