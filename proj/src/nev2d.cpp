#include "bidisc/nev2d.hpp"

#include <cmath>
#include <sstream>

#include "bidisc/representations.hpp"

namespace bidisc {

void TwoVarNevRep::validate(const Tolerances& tol) const {
    const Eigen::Index m = dim();
    if (B.cols() != m || Y.rows() != m || Y.cols() != m || alpha.size() != m)
        throw InvalidInput("Nevanlinna representation: inconsistent dimensions");
    if (!std::isfinite(b) || !all_finite(alpha) || !all_finite(B) || !all_finite(Y))
        throw InvalidInput("Nevanlinna representation: non-finite entry");
    if (!structure_check(B, StructureKind::hermitian, tol).pass)
        throw InvalidInput("Nevanlinna representation: B is not Hermitian");
    if (!structure_check(Y, StructureKind::positive_contraction, tol).pass)
        throw InvalidInput("Nevanlinna representation: Y is not a positive contraction");
}

Complex eval_h2(const TwoVarNevRep& rep, const HalfPlanePoint& z, const Tolerances& tol) {
    if (!(z.z1.imag() > 0.0) || !(z.z2.imag() > 0.0))
        throw DomainError("eval_h2: point not in the upper half-plane squared");
    const Eigen::Index m = rep.dim();
    if (m == 0) return rep.b;
    const CMatrix T = rep.B + z.z1 * rep.Y + z.z2 * (CMatrix::Identity(m, m) - rep.Y);
    const CVector v = solve(T, rep.alpha, tol);
    return rep.b - rep.alpha.dot(v);
}

Evaluator2 evaluator(const TwoVarNevRep& rep, const Tolerances& tol) {
    return [rep, tol](const HalfPlanePoint& z) { return eval_h2(rep, z, tol); };
}

InfinityReport carapoint_at_infinity(const Evaluator2& h, const std::vector<double>& ys_in) {
    const std::vector<double> ys = ys_in.empty() ? default_growth_ys() : ys_in;
    auto at = [&](double y) { return h({Complex(0.0, y), Complex(0.0, y)}); };
    ComplexEstimate g = extrapolate_infinity([&](double y) { return Complex(y * at(y).imag(), 0.0); }, ys);
    InfinityReport out;
    out.finite = g.report.converged && !g.report.diverged;
    out.limit = out.finite ? g.value.real() : INFINITY;
    out.growth = std::move(g.report);
    if (out.finite) {
        ComplexEstimate v = extrapolate_infinity(at, ys);
        out.value = v.value;
        out.values = std::move(v.report);
    }
    return out;
}

HalfPlanePoint to_halfplane(const BidiscPoint& lambda) {
    if (lambda.l1 == 1.0 || lambda.l2 == 1.0) throw DomainError("to_halfplane: lambda_j = 1");
    return {I_UNIT * (1.0 + lambda.l1) / (1.0 - lambda.l1), I_UNIT * (1.0 + lambda.l2) / (1.0 - lambda.l2)};
}

BidiscPoint to_bidisc(const HalfPlanePoint& z) {
    if (z.z1 == -I_UNIT || z.z2 == -I_UNIT) throw DomainError("to_bidisc: z_j = -i");
    return {(z.z1 - I_UNIT) / (z.z1 + I_UNIT), (z.z2 - I_UNIT) / (z.z2 + I_UNIT)};
}

Complex schur_value_from_pick(Complex h) {
    if (h == -I_UNIT) throw DomainError("schur_value_from_pick: h = -i");
    return (h - I_UNIT) / (h + I_UNIT);
}

Complex pick_value_from_schur(Complex phi) {
    if (phi == 1.0) throw DomainError("pick_value_from_schur: phi = 1");
    return I_UNIT * (1.0 + phi) / (1.0 - phi);
}

Evaluator schur_from_pick(const Evaluator2& h) {
    return [h](const BidiscPoint& l) { return schur_value_from_pick(h(to_halfplane(l))); };
}

Evaluator2 pick_from_schur(const Evaluator& phi) {
    return [phi](const HalfPlanePoint& z) { return pick_value_from_schur(phi(to_bidisc(z))); };
}

GeneralizedRealization generalized_from_rep(const TwoVarNevRep& rep) {
    const Eigen::Index m = rep.dim();
    CMatrix J(m + 1, m + 1);
    J(0, 0) = rep.b;
    J.block(0, 1, 1, m) = rep.alpha.adjoint();
    J.block(1, 0, m, 1) = rep.alpha;
    J.block(1, 1, m, m) = rep.B;
    const CMatrix Id = CMatrix::Identity(m + 1, m + 1);
    // J + i is invertible for Hermitian J.
    const CMatrix L = (J + I_UNIT * Id).partialPivLu().solve(J - I_UNIT * Id);
    GeneralizedRealization g;
    g.a = L(0, 0);
    g.beta = L.block(0, 1, 1, m).adjoint();
    g.gamma = L.block(1, 0, m, 1);
    g.Q = L.block(1, 1, m, m);
    g.Y = rep.Y;
    g.tau = CHI;
    // (1 - L)(1, u) has zero tail exactly when u = alpha / (b + i).
    g.u_tau = rep.alpha / (rep.b + I_UNIT);
    return g;
}

std::vector<HalfPlanePoint> rep_verification_grid() {
    const std::vector<Complex> pts{{0.0, 0.5}, {0.0, 1.0}, {1.0, 1.0}, {-1.0, 2.0}, {0.0, 3.0}};
    std::vector<HalfPlanePoint> grid;
    for (Complex a : pts)
        for (Complex b : pts) grid.push_back({a, b});
    return grid;
}

TwoVarNevRep rep_from_schur(const GeneralizedRealization& g, const Tolerances& tol) {
    if (std::abs(g.tau.l1 - 1.0) > 1e-12 || std::abs(g.tau.l2 - 1.0) > 1e-12)
        throw PreconditionError("rep_from_schur: the generalized realization must be taken at chi = (1, 1)");
    const Eigen::Index m = g.dim();
    CMatrix L(m + 1, m + 1);
    L(0, 0) = g.a;
    L.block(0, 1, 1, m) = g.beta.adjoint();
    L.block(1, 0, m, 1) = g.gamma;
    L.block(1, 1, m, m) = g.Q;
    const CMatrix Id = CMatrix::Identity(m + 1, m + 1);
    const CMatrix A = Id - L;
    Eigen::JacobiSVD<CMatrix> svd(A);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(m);
    if (!(smin > tol.rank_rel * std::max(smax, 1.0))) {
        std::ostringstream os;
        os << "obstruction: 1 - L is singular (sigma_min " << smin
           << "), so phi(chi) = 1 and no representation with a finite carapoint at infinity exists;"
              " the construction requires phi(chi) != 1";
        throw ObstructionError(os.str());
    }
    const CMatrix J = I_UNIT * (Id + L) * A.partialPivLu().inverse();
    const double herm = spectral_norm(J - J.adjoint());
    const double scale = std::max(1.0, spectral_norm(J));
    if (herm > std::sqrt(tol.structural) * scale) {
        std::ostringstream os;
        os << "rep_from_schur: J is not Hermitian (residual " << herm << ")";
        throw InternalInconsistency(os.str());
    }
    if (std::abs(J(0, 0).imag()) > std::sqrt(tol.structural) * scale)
        throw InternalInconsistency("rep_from_schur: J_00 is not real");
    TwoVarNevRep rep;
    rep.b = J(0, 0).real();
    rep.alpha = J.block(1, 0, m, 1);
    const CMatrix Bm = J.block(1, 1, m, m);
    rep.B = (Bm + Bm.adjoint()) / 2.0;
    rep.Y = (g.Y + g.Y.adjoint()) / 2.0;

    const Evaluator phi = evaluator(g, tol);
    double worst = 0.0;
    for (const auto& z : rep_verification_grid()) {
        const Complex hr = eval_h2(rep, z, tol);
        const Complex hg = pick_value_from_schur(phi(to_bidisc(z)));
        worst = std::max(worst, std::abs(hr - hg) / std::max(1.0, std::abs(hg)));
    }
    if (worst > 1e-8) {
        std::ostringstream os;
        os << "rep_from_schur: representation misses the Cayley transform by " << worst;
        throw InternalInconsistency(os.str());
    }
    return rep;
}

} // namespace bidisc
