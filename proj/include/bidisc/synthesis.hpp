#pragma once

#include "bidisc/colligation.hpp"
#include "bidisc/nev2d.hpp"
#include "bidisc/representations.hpp"

namespace bidisc {

// phi(lambda) = omega (1 - f(mu)) / (1 + f(mu)), mu = (conj(tau1) lambda1, conj(tau2) lambda2),
// f = sum w f_s.
struct SynthesizedSchur {
    DiscreteMeasure01 nu;
    TorusPoint tau = CHI;
    Complex omega{1.0, 0.0};

    void validate() const;
};

// (s (1+l1)/(1-l1) + (1-s)(1+l2)/(1-l2))^{-1}, written without the 1/(1 - l_j) poles.
Complex herglotz_component(double s, const BidiscPoint& lambda);
Complex herglotz_sum(const DiscreteMeasure01& nu, const BidiscPoint& lambda);

Complex synth_eval(const SynthesizedSchur& syn, const BidiscPoint& lambda);
Evaluator evaluator(const SynthesizedSchur& syn);

// h of the synthesized function, i.e. h_from_measure(nu, .)
Evaluator1 slope_function(const SynthesizedSchur& syn);

struct SlopeCheckEntry {
    Direction delta;
    Complex numeric;
    Complex analytic;
    double rel_error = 0.0;
    bool converged = false;
};

struct SlopeVerification {
    std::vector<SlopeCheckEntry> entries;
    double max_rel_error = 0.0;
    bool pass = false;
};

SlopeVerification verify_slope(const SynthesizedSchur& syn, const std::vector<Direction>& deltas,
                               double tol = 1e-5);

struct CarapointVerification {
    double liminf = 0.0;
    double expected_liminf = 0.0;    // total mass of nu
    Complex value;
    Complex expected_value;          // omega
    bool liminf_converged = false;
    bool value_converged = false;
    bool pass = false;
};

CarapointVerification verify_carapoint(const SynthesizedSchur& syn, double tol = 1e-6);

// Explicit finite-dimensional realization: the Cayley-transform rep (b = 0, alpha = sqrt w,
// B = 0, Y = diag s) gives a generalized realization of -phi at chi; flipping the sign of
// the top row, lifting to a plain colligation and relocating yields a colligation of phi.
Colligation synth_colligation(const SynthesizedSchur& syn);

} // namespace bidisc
