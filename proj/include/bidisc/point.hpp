#pragma once

#include <algorithm>
#include <functional>

#include "bidisc/linalg.hpp"

namespace bidisc {

// A point of C^2; interior operations require both coordinates in the open disc,
// torus operations require both on the unit circle.
struct BidiscPoint {
    Complex l1{0.0, 0.0};
    Complex l2{0.0, 0.0};

    double norm_inf() const { return std::max(std::abs(l1), std::abs(l2)); }
    bool interior() const { return std::abs(l1) < 1.0 && std::abs(l2) < 1.0; }
};

using TorusPoint = BidiscPoint;

inline const TorusPoint CHI{Complex{1.0, 0.0}, Complex{1.0, 0.0}};

// Evaluators must be safe to call concurrently (no hidden mutable state).
using Evaluator = std::function<Complex(const BidiscPoint&)>;

void require_interior(const BidiscPoint& p, const char* where);
// Throws InvalidInput unless | |tau_j| - 1 | <= slack for both coordinates.
void require_torus(const TorusPoint& t, const char* where, double slack = 1e-9);
// Projects both coordinates onto the circle (after require_torus-style validation).
TorusPoint normalize_torus(const TorusPoint& t, double slack = 1e-9);

// Direction delta in H(tau): Re(conj(tau_j) delta_j) > 0.
struct Direction {
    Complex d1{1.0, 0.0};
    Complex d2{1.0, 0.0};
};
bool in_H(const TorusPoint& tau, const Direction& d);
void require_in_H(const TorusPoint& tau, const Direction& d, const char* where);

// tau - t*delta
inline BidiscPoint along(const TorusPoint& tau, const Direction& d, double t) {
    return {tau.l1 - t * d.d1, tau.l2 - t * d.d2};
}

} // namespace bidisc
