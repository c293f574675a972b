#include "bidisc/extrapolation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bidisc {

std::vector<double> halving_steps(double t0, int count) {
    std::vector<double> out;
    out.reserve(count);
    double t = t0;
    for (int k = 0; k < count; ++k) {
        t *= 0.5;
        out.push_back(t);
    }
    return out;
}

ComplexEstimate extrapolate_limit(const std::function<Complex(double)>& f,
                                  const std::vector<double>& steps,
                                  const ExtrapolationOptions& opt) {
    ComplexEstimate out;
    ConvergenceReport& rep = out.report;
    std::vector<std::vector<Complex>> tab;
    double best_diff = std::numeric_limits<double>::infinity();
    Complex best{0.0, 0.0};
    int growth_run = 0;

    for (double t : steps) {
        Complex v;
        try {
            v = f(t);
        } catch (const IllConditioned& e) {
            rep.note = std::string("sampling stopped: ") + e.what();
            break;
        }
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            rep.note = "sampling stopped: non-finite sample";
            break;
        }
        rep.steps.push_back(t);
        rep.samples.push_back(v);

        std::vector<Complex> row{v};
        const std::size_t k = tab.size();
        // Neville recursion for the value at t = 0 of the interpolating polynomial.
        for (int j = 1; j <= opt.depth && static_cast<std::size_t>(j) <= k; ++j) {
            const double tj = rep.steps[k - j];
            row.push_back((tj * row[j - 1] - t * tab[k - 1][j - 1]) / (tj - t));
        }
        tab.push_back(row);
        const Complex est = row.back();
        rep.estimates.push_back(est);

        const std::size_t n = rep.estimates.size();
        if (n >= 2) {
            const double d = std::abs(rep.estimates[n - 1] - rep.estimates[n - 2]);
            if (d < best_diff) {
                best_diff = d;
                best = est;
            }
        } else {
            best = est;
        }

        // Divergence: raw samples growing monotonically past the threshold.
        if (rep.samples.size() >= 2 && std::abs(v) > std::abs(rep.samples[rep.samples.size() - 2]))
            ++growth_run;
        else
            growth_run = 0;
        if (std::abs(v) > opt.divergence && growth_run >= 3) {
            rep.diverged = true;
            rep.note = "sequence grows without bound";
            out.value = v;
            return out;
        }

        // Require the tableau to be full before trusting agreement.
        if (n >= 3 && row.size() >= static_cast<std::size_t>(std::min<std::size_t>(opt.depth + 1, 3))) {
            const double scale = std::max(1.0, std::abs(est));
            const double d1 = std::abs(rep.estimates[n - 1] - rep.estimates[n - 2]);
            const double d2 = std::abs(rep.estimates[n - 2] - rep.estimates[n - 3]);
            if (d1 <= opt.tol * scale && d2 <= opt.tol * scale) {
                rep.converged = true;
                out.value = est;
                return out;
            }
        }
    }
    if (rep.note.empty()) rep.note = "no three successive estimates agreed within tolerance";
    out.value = best;
    return out;
}

} // namespace bidisc
