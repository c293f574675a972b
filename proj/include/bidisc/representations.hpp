#pragma once

#include <vector>

#include "bidisc/extrapolation.hpp"
#include "bidisc/slope.hpp"

namespace bidisc {

struct Atom01 {
    double s = 0.0;
    double w = 0.0;
};

// Atomic positive measure on [0, 1], atoms sorted by strictly increasing s.
struct DiscreteMeasure01 {
    std::vector<Atom01> atoms;

    // Sorts, merges coincident s by summing weights, drops zero weights.
    // Throws InvalidInput for s outside [0,1], negative or non-finite weights.
    static DiscreteMeasure01 normalize(std::vector<Atom01> raw);
    double total_mass() const;
    void validate() const;
};

struct AtomR {
    double t = 0.0;
    double m = 0.0;
};

// h(z) = c + d z + (1/pi) sum m (1 + t z)/(t - z)
struct NevanlinnaData {
    double c = 0.0;
    double d = 0.0;
    std::vector<AtomR> atoms;

    static NevanlinnaData normalize(double c, double d, std::vector<AtomR> raw);
    void validate() const;
};

Complex h_from_measure(const DiscreteMeasure01& nu, Complex z);
Complex h_from_nevanlinna(const NevanlinnaData& nd, Complex z);

NevanlinnaData nevanlinna_from_measure(const DiscreteMeasure01& nu);
// Throws NotSlopeType naming condition 'a' (d = 0), 'b' (no mass on t > 0) or 'c'.
DiscreteMeasure01 measure_from_nevanlinna(const NevanlinnaData& nd);

// The operator model: Y = diag(s), u = (sqrt w).
SlopePair slope_pair_from_measure(const DiscreteMeasure01& nu);
// Spectral measure of Y with respect to u; eigenvalues closer than merge_tol are merged.
DiscreteMeasure01 measure_from_slope_pair(const SlopePair& sp, double merge_tol = 1e-9);

struct StieltjesResult {
    double value = 0.0;               // extrapolated to y = 0
    std::vector<double> ys;
    std::vector<double> integrals;    // int_a^b Im h(x + iy) dx per y
    std::vector<double> extrapolated;
    bool converged = false;
};

// Window mass sum m (1 + t^2) over a < t < b (half weight at endpoints).
// Each integral by adaptive trapezoid/Richardson to relative 1e-6, then linear extrapolation in y.
StieltjesResult stieltjes_recover(const Evaluator1& h, double a, double b,
                                  const std::vector<double>& ys = {1e-1, 1e-2, 1e-3, 1e-4},
                                  double rel_tol = 1e-6);

// sum m / (t - z)
Complex cauchy_rep_eval(const std::vector<AtomR>& mu, Complex z);

struct GrowthResult {
    bool finite = false;
    double limit = 0.0;
    ConvergenceReport report;
};

// lim y Im h(iy) as y -> infinity.
GrowthResult growth_check(const Evaluator1& h, const std::vector<double>& ys = {});

// Extrapolation of g(y) as y -> infinity over increasing ys, treating 1/y as the small parameter.
ComplexEstimate extrapolate_infinity(const std::function<Complex(double)>& g, const std::vector<double>& ys,
                                     const ExtrapolationOptions& opt = {1e-8, 2, 1e6});
std::vector<double> default_growth_ys();   // 10^1 .. 10^8

} // namespace bidisc
