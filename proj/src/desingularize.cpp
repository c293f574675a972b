#include "bidisc/desingularize.hpp"

#include <cmath>
#include <sstream>

#include "bidisc/boundary.hpp"

namespace bidisc {

void GeneralizedRealization::validate(const Tolerances& tol) const {
    const Eigen::Index m = dim();
    if (Q.cols() != m || Y.rows() != m || Y.cols() != m || beta.size() != m || gamma.size() != m ||
        u_tau.size() != m)
        throw InvalidInput("generalized realization: inconsistent dimensions");
    if (!all_finite(Q) || !all_finite(Y) || !all_finite(beta) || !all_finite(gamma) || !all_finite(u_tau))
        throw InvalidInput("generalized realization: non-finite entry");
    require_torus(tau, "generalized realization");
    if (!structure_check(Y, StructureKind::positive_contraction, tol).pass)
        throw InvalidInput("generalized realization: Y is not a positive contraction");
    if (!structure_check(Q, StructureKind::contraction, tol).pass)
        throw InvalidInput("generalized realization: Q is not a contraction");
    if (m == 0) return;
    const CMatrix A = CMatrix::Identity(m, m) - Q;
    if (null_space(A, tol).cols() != 0)
        throw InvalidInput("generalized realization: 1 - Q has a kernel");
    const double r = (A * u_tau - gamma).norm();
    if (r > std::sqrt(tol.structural) * std::max(1.0, gamma.norm()))
        throw InvalidInput("generalized realization: (1 - Q) u_tau differs from gamma");
}

Desingularization desingularize(const Colligation& c, const TorusPoint& tau_in, const Tolerances& tol) {
    const TorusPoint tau = normalize_torus(tau_in);
    const Eigen::Index n = c.dim();
    const CMatrix T = coordinate_operator(c.P1, tau);
    const CMatrix DT = c.D * T;
    const CMatrix A = CMatrix::Identity(n, n) - DT;

    Desingularization out;
    CVector u_amb;
    try {
        u_amb = min_norm_solve(A, c.gamma, tol);
    } catch (const NoSolution& e) {
        std::ostringstream os;
        os << "tau is not a carapoint: gamma is not in ran(1 - D tau) (residual " << e.residual() << ")";
        throw PreconditionError(os.str());
    }
    const KernelSplit split = kernel_split(A, tol);
    const CMatrix& N = split.kernel;
    const CMatrix& M = split.complement;

    GeneralizedRealization& g = out.g;
    g.tau = tau;
    g.a = c.a;
    g.Y = M.adjoint() * c.P1 * M;
    g.Y = (g.Y + g.Y.adjoint()) / 2.0;
    g.Q = M.adjoint() * DT * M;
    g.gamma = M.adjoint() * c.gamma;
    const CVector tb = T.adjoint() * c.beta;
    g.beta = M.adjoint() * tb;
    g.u_tau = M.adjoint() * u_amb;

    DesingularizationReport& rep = out.report;
    rep.dim_total = static_cast<int>(n);
    rep.dim_N = static_cast<int>(N.cols());
    rep.dim_M = static_cast<int>(M.cols());
    rep.retained_ratio = split.retained_ratio;
    // Singular values within a factor 1e3 of the cutoff are suspicious.
    rep.near_kernel_warning = split.rank > 0 && split.retained_ratio < 1e3 * tol.rank_rel;
    rep.gamma_perp_residual = (N.adjoint() * c.gamma).norm();
    rep.beta_perp_residual = (N.adjoint() * tb).norm();
    rep.u_tau_perp_residual = N.cols() ? (N.adjoint() * u_amb).cwiseAbs().maxCoeff() : 0.0;
    const Eigen::Index m = M.cols();
    if (m > 0) {
        const CMatrix Iq = CMatrix::Identity(m, m) - g.Q;
        rep.chiga_residual = (Iq * g.u_tau - g.gamma).norm();
        Eigen::JacobiSVD<CMatrix> sv(Iq);
        rep.Q_unit_kernel_sigma = sv.singularValues()(m - 1);
    }
    if (N.cols() > 0 && m > 0) {
        const Eigen::Index k = N.cols();
        const CMatrix X = N.adjoint() * c.P1 * N;
        const CMatrix B = N.adjoint() * c.P1 * M;
        const CMatrix& Y = g.Y;
        const CMatrix Ik = CMatrix::Identity(k, k), Im = CMatrix::Identity(m, m);
        const double r1 = spectral_norm(B * B.adjoint() - X * (Ik - X));
        const double r2 = spectral_norm(B.adjoint() * B - Y * (Im - Y));
        const double r3 = spectral_norm(B * Y - (Ik - X) * B);
        const double r4 = spectral_norm(B.adjoint() * X - (Im - Y) * B.adjoint());
        rep.decomp_residual = std::max({r1, r2, r3, r4});
    }
    out.kernel_basis = N;
    out.complement_basis = M;
    out.u_tau_ambient = u_amb;

    const double bound = std::sqrt(tol.structural);
    if (rep.gamma_perp_residual > bound || rep.beta_perp_residual > bound)
        throw InternalInconsistency("desingularize: gamma or tau^* beta has a component in ker(1 - D tau)");
    return out;
}

CMatrix eval_I(const CMatrix& Y, const TorusPoint& tau, const BidiscPoint& lambda) {
    const Eigen::Index m = Y.rows();
    const Complex d1 = 1.0 - std::conj(tau.l1) * lambda.l1;
    const Complex d2 = 1.0 - std::conj(tau.l2) * lambda.l2;
    if (m == 0) return CMatrix::Zero(0, 0);
    if (d1 == 0.0 && d2 == 0.0) return CMatrix::Identity(m, m);
    // I = 1 - d1 d2 (d1 (1 - Y) + d2 Y)^{-1}, diagonalized in the eigenbasis of Y.
    Eigen::SelfAdjointEigenSolver<CMatrix> es((Y + Y.adjoint()) / 2.0);
    const Eigen::VectorXd y = es.eigenvalues().cwiseMax(0.0).cwiseMin(1.0);
    const double scale = std::max(std::abs(d1), std::abs(d2));
    CVector diag(m);
    for (Eigen::Index k = 0; k < m; ++k) {
        const Complex den = d1 * (1.0 - y(k)) + d2 * y(k);
        if (std::abs(den) <= 1e-14 * scale)
            throw BoundarySingularity("eval_I: denominator singular at this point");
        diag(k) = 1.0 - d1 * d2 / den;
    }
    const CMatrix& V = es.eigenvectors();
    return V * diag.asDiagonal() * V.adjoint();
}

CMatrix eval_I(const GeneralizedRealization& g, const BidiscPoint& lambda) {
    return eval_I(g.Y, g.tau, lambda);
}

CVector u_vector(const GeneralizedRealization& g, const BidiscPoint& lambda, const Tolerances& tol) {
    require_interior(lambda, "u_vector");
    const Eigen::Index m = g.dim();
    const CMatrix I = eval_I(g, lambda);
    return solve(CMatrix::Identity(m, m) - g.Q * I, g.gamma, tol);
}

Complex eval_phi_gen(const GeneralizedRealization& g, const BidiscPoint& lambda, const Tolerances& tol) {
    require_interior(lambda, "eval_phi_gen");
    const Eigen::Index m = g.dim();
    if (m == 0) return g.a;
    const CMatrix I = eval_I(g, lambda);
    const CVector u = solve(CMatrix::Identity(m, m) - g.Q * I, g.gamma, tol);
    return g.a + g.beta.dot(I * u);
}

double model_residual_gen(const GeneralizedRealization& g, const BidiscPoint& lambda, const BidiscPoint& mu,
                          const Tolerances& tol) {
    const Eigen::Index m = g.dim();
    const CMatrix Il = eval_I(g, lambda), Imu = eval_I(g, mu);
    const CVector ul = u_vector(g, lambda, tol), um = u_vector(g, mu, tol);
    const Complex pl = g.a + g.beta.dot(Il * ul);
    const Complex pm = g.a + g.beta.dot(Imu * um);
    const Complex lhs = 1.0 - std::conj(pm) * pl;
    const Complex rhs = um.dot((CMatrix::Identity(m, m) - Imu.adjoint() * Il) * ul);
    return std::abs(lhs - rhs);
}

Colligation lift_to_colligation(const GeneralizedRealization& g) {
    const Eigen::Index m = g.dim();
    const CMatrix Im = CMatrix::Identity(m, m);
    const CMatrix Yh = (g.Y + g.Y.adjoint()) / 2.0;
    const CMatrix S = psd_sqrt(Yh * (Im - Yh));
    Colligation c;
    c.a = g.a;
    c.P1 = CMatrix::Zero(2 * m, 2 * m);
    c.P1.topLeftCorner(m, m) = Im - Yh;
    c.P1.topRightCorner(m, m) = S;
    c.P1.bottomLeftCorner(m, m) = S;
    c.P1.bottomRightCorner(m, m) = Yh;
    CMatrix DT = CMatrix::Identity(2 * m, 2 * m);
    DT.bottomRightCorner(m, m) = g.Q;
    const CMatrix T = coordinate_operator(c.P1, g.tau);
    c.D = DT * T.adjoint();
    c.gamma = CVector::Zero(2 * m);
    c.gamma.tail(m) = g.gamma;
    CVector b = CVector::Zero(2 * m);
    b.tail(m) = g.beta;
    c.beta = T * b;
    return c;
}

QuadratureCheck quadrature_log_check(int nodes, const BidiscPoint& lambda) {
    if (nodes < 2) throw InvalidInput("quadrature_log_check: need at least 2 nodes");
    require_interior(lambda, "quadrature_log_check");
    if (std::abs(lambda.l1 - lambda.l2) < 1e-12)
        throw UseLimit("quadrature_log_check: closed form degenerates when lambda1 = lambda2");
    const Complex d1 = 1.0 - lambda.l1, d2 = 1.0 - lambda.l2;
    // Y is diagonal so <I 1, 1> is the mean of the diagonal of I; no dense matrix needed.
    Complex sum{0.0, 0.0};
    for (int k = 0; k < nodes; ++k) {
        const double s = (k + 0.5) / nodes;
        sum += 1.0 - d1 * d2 / (d1 * (1.0 - s) + d2 * s);
    }
    QuadratureCheck out;
    out.numeric = sum / static_cast<double>(nodes);
    out.closed_form = 1.0 - (1.0 - lambda.l1) * (1.0 - lambda.l2) / (lambda.l1 - lambda.l2) *
                                (std::log(1.0 - lambda.l2) - std::log(1.0 - lambda.l1));
    out.error = std::abs(out.numeric - out.closed_form);
    return out;
}

Evaluator evaluator(const GeneralizedRealization& g, const Tolerances& tol) {
    return [g, tol](const BidiscPoint& p) { return eval_phi_gen(g, p, tol); };
}

} // namespace bidisc
