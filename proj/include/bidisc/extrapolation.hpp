#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bidisc/linalg.hpp"

namespace bidisc {

struct ExtrapolationOptions {
    double tol = 1e-10;          // relative agreement of three successive estimates
    int depth = 3;               // Richardson tableau depth (1 = two-term)
    double divergence = 1e6;     // monotone growth beyond this flags divergence
};

struct ConvergenceReport {
    std::vector<double> steps;        // t_k actually sampled
    std::vector<Complex> samples;     // raw sequence values
    std::vector<Complex> estimates;   // extrapolated values
    bool converged = false;
    bool diverged = false;
    std::string note;
};

struct ComplexEstimate {
    Complex value{0.0, 0.0};
    ConvergenceReport report;
};

struct RealEstimate {
    double value = 0.0;
    ConvergenceReport report;
};

// Limit of f(t) as t -> 0+ along the given steps, assuming an expansion in integer
// powers of t. Evaluation stops at convergence; IllConditioned from f ends sampling.
// Steps must decrease strictly.
ComplexEstimate extrapolate_limit(const std::function<Complex(double)>& f,
                                  const std::vector<double>& steps,
                                  const ExtrapolationOptions& opt = {});

// t_k = t0 * 2^-k, k = 1..count
std::vector<double> halving_steps(double t0, int count = 40);

} // namespace bidisc
