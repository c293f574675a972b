#include "bidisc/boundary.hpp"

#include <cmath>

namespace bidisc {

ApproachPath ApproachPath::make(const TorusPoint& tau, const Direction& delta, int count) {
    require_torus(tau, "ApproachPath");
    require_in_H(tau, delta, "ApproachPath");
    // |tau_j - t delta_j| < 1  iff  t |delta_j|^2 < 2 Re(conj(tau_j) delta_j)
    const double t1 = 2.0 * (std::conj(tau.l1) * delta.d1).real() / std::norm(delta.d1);
    const double t2 = 2.0 * (std::conj(tau.l2) * delta.d2).real() / std::norm(delta.d2);
    ApproachPath p;
    p.tau = tau;
    p.delta = delta;
    p.steps = halving_steps(std::min({1.0, t1, t2}), count);
    return p;
}

ApproachPath ApproachPath::radial(const TorusPoint& tau, int count) {
    return make(tau, Direction{tau.l1, tau.l2}, count);
}

void ApproachPath::validate() const {
    require_torus(tau, "ApproachPath");
    require_in_H(tau, delta, "ApproachPath");
    for (std::size_t k = 0; k < steps.size(); ++k) {
        if (!(steps[k] > 0.0)) throw InvalidInput("ApproachPath: steps must be positive");
        if (k && steps[k] >= steps[k - 1]) throw InvalidInput("ApproachPath: steps must decrease");
        require_interior(along(tau, delta, steps[k]), "ApproachPath");
    }
}

CarapointResult is_carapoint(const Colligation& c, const TorusPoint& tau, const Tolerances& tol) {
    require_torus(tau, "is_carapoint");
    const Eigen::Index n = c.dim();
    CarapointResult out;
    if (n == 0) {
        out.carapoint = true;
        out.witness = CVector::Zero(0);
        return out;
    }
    const CMatrix A = CMatrix::Identity(n, n) - c.D * coordinate_operator(c.P1, tau);
    try {
        out.witness = min_norm_solve(A, c.gamma, tol);
        out.carapoint = true;
        out.residual = (A * out.witness - c.gamma).norm();
    } catch (const NoSolution& e) {
        out.carapoint = false;
        out.residual = e.residual();
    }
    return out;
}

double julia_quotient(const Evaluator& phi, const BidiscPoint& lambda) {
    require_interior(lambda, "julia_quotient");
    const double r = lambda.norm_inf();
    return (1.0 - std::norm(phi(lambda))) / (1.0 - r * r);
}

RealEstimate radial_liminf(const Evaluator& phi, const ApproachPath& path, const ExtrapolationOptions& opt) {
    path.validate();
    auto f = [&](double t) { return Complex(julia_quotient(phi, along(path.tau, path.delta, t)), 0.0); };
    ComplexEstimate e = extrapolate_limit(f, path.steps, opt);
    RealEstimate out;
    out.value = e.report.diverged ? INFINITY : e.value.real();
    out.report = std::move(e.report);
    return out;
}

ComplexEstimate nontangential_value(const Evaluator& phi, const ApproachPath& path,
                                    const ExtrapolationOptions& opt) {
    path.validate();
    auto f = [&](double t) { return phi(along(path.tau, path.delta, t)); };
    return extrapolate_limit(f, path.steps, opt);
}

} // namespace bidisc
