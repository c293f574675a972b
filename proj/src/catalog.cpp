#include "bidisc/catalog.hpp"

#include <cmath>

namespace bidisc {

Complex favourite_phi(const BidiscPoint& l) {
    return (0.5 * l.l1 + 0.5 * l.l2 - l.l1 * l.l2) / (1.0 - 0.5 * l.l1 - 0.5 * l.l2);
}

Evaluator favourite_evaluator() { return favourite_phi; }

CVector favourite_model_vector(const BidiscPoint& l) {
    const Complex p = 1.0 - 0.5 * l.l1 - 0.5 * l.l2;
    CVector u(2);
    u << (1.0 - l.l2), (1.0 - l.l1);
    return u / (std::sqrt(2.0) * p);
}

std::vector<BidiscPoint> fitting_grid(int count) {
    std::vector<BidiscPoint> pts;
    for (int k = 0; k < count; ++k) {
        const double r1 = 0.2 + 0.6 * ((k * 7) % 11) / 10.0;
        const double r2 = 0.15 + 0.7 * ((k * 5) % 13) / 12.0;
        pts.push_back({std::polar(r1, 0.9 * k + 0.3), std::polar(r2, 2.1 * k + 1.1)});
    }
    return pts;
}

Colligation favourite_colligation(const Tolerances& tol) {
    const auto pts = fitting_grid();
    std::vector<Complex> phis;
    CMatrix U(2, static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        phis.push_back(favourite_phi(pts[i]));
        U.col(static_cast<Eigen::Index>(i)) = favourite_model_vector(pts[i]);
    }
    CMatrix P1 = CMatrix::Zero(2, 2);
    P1(0, 0) = 1.0;
    return fit_colligation(pts, phis, U, P1, tol);
}

Colligation lambda1_colligation() {
    Colligation c;
    c.a = 0.0;
    c.beta = CVector::Ones(1);
    c.gamma = CVector::Ones(1);
    c.D = CMatrix::Zero(1, 1);
    c.P1 = CMatrix::Identity(1, 1);
    return c;
}

} // namespace bidisc
