#pragma once

#include <functional>

#include "bidisc/desingularize.hpp"
#include "bidisc/extrapolation.hpp"

namespace bidisc {

// h(z) = b - <(B + z1 Y + z2 (1 - Y))^{-1} alpha, alpha>
struct TwoVarNevRep {
    double b = 0.0;
    CVector alpha;
    CMatrix B;
    CMatrix Y;

    Eigen::Index dim() const { return B.rows(); }
    void validate(const Tolerances& tol = {}) const;
};

struct HalfPlanePoint {
    Complex z1{0.0, 1.0};
    Complex z2{0.0, 1.0};
};

using Evaluator2 = std::function<Complex(const HalfPlanePoint&)>;

Complex eval_h2(const TwoVarNevRep& rep, const HalfPlanePoint& z, const Tolerances& tol = {});
Evaluator2 evaluator(const TwoVarNevRep& rep, const Tolerances& tol = {});

struct InfinityReport {
    bool finite = false;
    double limit = 0.0;        // lim y Im h(iy chi)
    Complex value{0.0, 0.0};   // lim h(iy chi)
    ConvergenceReport growth;
    ConvergenceReport values;
};

InfinityReport carapoint_at_infinity(const Evaluator2& h, const std::vector<double>& ys = {});

// Cayley maps between the bidisc and Pi^2, and between Schur and Pick values.
HalfPlanePoint to_halfplane(const BidiscPoint& lambda);
BidiscPoint to_bidisc(const HalfPlanePoint& z);
Complex schur_value_from_pick(Complex h);   // (h - i)/(h + i)
Complex pick_value_from_schur(Complex phi); // i(1 + phi)/(1 - phi)
Evaluator schur_from_pick(const Evaluator2& h);
Evaluator2 pick_from_schur(const Evaluator& phi);

// Generalized realization at chi of the Schur function (h - i)/(h + i), with
// L = (J + i)^{-1}(J - i) and J = [[b, alpha^*], [alpha, B]].
GeneralizedRealization generalized_from_rep(const TwoVarNevRep& rep);

// The fixed verification grid: z_j in {0.5i, i, 1+i, -1+2i, 3i}.
std::vector<HalfPlanePoint> rep_verification_grid();

// Inverse construction. Throws ObstructionError when 1 - L is singular (phi(chi) = 1),
// InternalInconsistency when J fails to be Hermitian or the grid check fails.
TwoVarNevRep rep_from_schur(const GeneralizedRealization& g, const Tolerances& tol = {});

} // namespace bidisc
