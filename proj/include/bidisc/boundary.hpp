#pragma once

#include "bidisc/colligation.hpp"
#include "bidisc/extrapolation.hpp"

namespace bidisc {

// The ray tau - t*delta, t in steps; radial when delta = tau.
struct ApproachPath {
    TorusPoint tau = CHI;
    Direction delta;
    std::vector<double> steps;

    // Default steps t_k = min(1, t_max) 2^-k, k = 1..40, where t_max bounds the
    // parameters keeping tau - t*delta inside the bidisc.
    static ApproachPath make(const TorusPoint& tau, const Direction& delta, int count = 40);
    static ApproachPath radial(const TorusPoint& tau, int count = 40);
    void validate() const;
};

struct CarapointResult {
    bool carapoint = false;
    CVector witness;          // minimal-norm solution of (1 - D tau) u = gamma
    double residual = 0.0;    // solve residual, or the failed residual when not a carapoint
};

CarapointResult is_carapoint(const Colligation& c, const TorusPoint& tau, const Tolerances& tol = {});

// (1 - |phi|^2) / (1 - ||lambda||_inf^2)
double julia_quotient(const Evaluator& phi, const BidiscPoint& lambda);

// Limit of the Julia quotient along the path; report.diverged flags growth past 1e6.
RealEstimate radial_liminf(const Evaluator& phi, const ApproachPath& path,
                           const ExtrapolationOptions& opt = {});

ComplexEstimate nontangential_value(const Evaluator& phi, const ApproachPath& path,
                                    const ExtrapolationOptions& opt = {});

} // namespace bidisc
