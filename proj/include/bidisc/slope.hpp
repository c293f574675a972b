#pragma once

#include <functional>

#include "bidisc/boundary.hpp"
#include "bidisc/desingularize.hpp"

namespace bidisc {

// h(z) = -<(1 - Y + zY)^{-1} u, u>
struct SlopePair {
    CMatrix Y;
    CVector u_tau;

    void validate(const Tolerances& tol = {}) const;
};

using Evaluator1 = std::function<Complex(Complex)>;

SlopePair slope_pair(const GeneralizedRealization& g);

// Evaluated in the eigenbasis of Y, so values on (0, inf) are exactly real.
// Throws DomainError for z on (-inf, 0].
Complex slope_eval(const SlopePair& s, Complex z);
Evaluator1 slope_evaluator(const SlopePair& s);

// phi(tau) conj(tau2) delta2 h(conj(tau2) delta2 / (conj(tau1) delta1))
Complex directional_derivative_formula(Complex phi_tau, const TorusPoint& tau, const Direction& delta,
                                       const Evaluator1& h);
Complex directional_derivative_analytic(Complex phi_tau, const TorusPoint& tau, const Direction& delta,
                                        const SlopePair& s);

// Limit of (phi(tau - t delta) - phi(tau)) / t with two-term Richardson extrapolation.
ComplexEstimate directional_derivative_numeric(const Evaluator& phi, const TorusPoint& tau,
                                               const Direction& delta, Complex phi_tau,
                                               const ExtrapolationOptions& opt = {1e-9, 1, 1e6});
// Same, with phi(tau) taken from nontangential_value along delta.
ComplexEstimate directional_derivative_numeric(const Evaluator& phi, const TorusPoint& tau,
                                               const Direction& delta,
                                               const ExtrapolationOptions& opt = {1e-9, 1, 1e6});

struct PickReport {
    double min_im_h = 0.0;
    double min_im_zh = 0.0;   // min Im(-z h(z))
    bool pass = false;
};

// One-variable check of h and -z h on upper half-plane points.
PickReport pick_check(const Evaluator1& h, const std::vector<Complex>& grid, double floor = -1e-12);

struct RealAxisReport {
    std::vector<Complex> values;
    double max_abs_im = 0.0;
    bool pass = false;
};

RealAxisReport slope_real_axis_check(const SlopePair& s, const std::vector<double>& xs);

} // namespace bidisc
