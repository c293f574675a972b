#pragma once

#include "bidisc/colligation.hpp"

namespace bidisc {

// Realization (a, beta, gamma, Q) on N^perp with the inner function I built from Y and tau.
struct GeneralizedRealization {
    Complex a{0.0, 0.0};
    CVector beta;
    CVector gamma;
    CMatrix Q;
    CMatrix Y;
    TorusPoint tau = CHI;
    CVector u_tau;

    Eigen::Index dim() const { return Q.rows(); }
    // Shapes, Y positive contraction, Q contraction with trivial ker(1-Q), (1-Q)u_tau = gamma.
    void validate(const Tolerances& tol = {}) const;
};

struct DesingularizationReport {
    int dim_total = 0;
    int dim_N = 0;
    int dim_M = 0;
    double retained_ratio = 1.0;     // smallest kept singular value of 1 - D tau over the largest
    bool near_kernel_warning = false;
    double gamma_perp_residual = 0.0;    // component of gamma in N
    double beta_perp_residual = 0.0;     // component of tau^* beta in N
    double u_tau_perp_residual = 0.0;    // max |<u_tau, n>| over the kernel basis
    double chiga_residual = 0.0;         // ||(1 - Q) u_tau - gamma||
    double decomp_residual = 0.0;        // block identities of P1 = [[X, B], [B^*, Y]]
    double Q_unit_kernel_sigma = 0.0;    // smallest singular value of 1 - Q
};

struct Desingularization {
    GeneralizedRealization g;
    DesingularizationReport report;
    CMatrix kernel_basis;      // N
    CMatrix complement_basis;  // M = N^perp, the basis in which g is expressed
    CVector u_tau_ambient;
};

// Throws PreconditionError when tau is not a carapoint.
Desingularization desingularize(const Colligation& c, const TorusPoint& tau, const Tolerances& tol = {});

// I(lambda) of the generalized model; throws BoundarySingularity when the denominator is singular.
CMatrix eval_I(const GeneralizedRealization& g, const BidiscPoint& lambda);
CMatrix eval_I(const CMatrix& Y, const TorusPoint& tau, const BidiscPoint& lambda);

CVector u_vector(const GeneralizedRealization& g, const BidiscPoint& lambda, const Tolerances& tol = {});
Complex eval_phi_gen(const GeneralizedRealization& g, const BidiscPoint& lambda, const Tolerances& tol = {});
double model_residual_gen(const GeneralizedRealization& g, const BidiscPoint& lambda, const BidiscPoint& mu,
                          const Tolerances& tol = {});

// Plain colligation on twice the dimension whose desingularization at g.tau gives back (Y, Q).
// P1 = [[1-Y, S], [S, Y]] with S = sqrt(Y(1-Y)); D tau = diag(1, Q).
Colligation lift_to_colligation(const GeneralizedRealization& g);

struct QuadratureCheck {
    Complex numeric;
    Complex closed_form;
    double error = 0.0;
};

// <I(lambda) 1, 1> for Y = multiplication by s on [0,1], discretized at cell midpoints, tau = chi.
QuadratureCheck quadrature_log_check(int nodes, const BidiscPoint& lambda);

Evaluator evaluator(const GeneralizedRealization& g, const Tolerances& tol = {});

} // namespace bidisc
