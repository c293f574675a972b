#pragma once

#include "bidisc/linalg.hpp"
#include "bidisc/point.hpp"

namespace bidisc {

// L = [[a, beta^*], [gamma, D]] unitary on C + M, with P1 the projection onto M_1.
struct Colligation {
    Complex a{0.0, 0.0};
    CVector beta;
    CVector gamma;
    CMatrix D;
    CMatrix P1;

    Eigen::Index dim() const { return D.rows(); }
    CMatrix L() const;
    // Shapes, unitarity of L, P1 a Hermitian projection.
    void validate(const Tolerances& tol = {}) const;
};

// lambda1 P1 + lambda2 (1 - P1)
CMatrix coordinate_operator(const CMatrix& P1, const BidiscPoint& lambda);

Complex eval_phi(const Colligation& c, const BidiscPoint& lambda, const Tolerances& tol = {});
CVector model_vector(const Colligation& c, const BidiscPoint& lambda, const Tolerances& tol = {});
double model_residual(const Colligation& c, const BidiscPoint& lambda, const BidiscPoint& mu,
                      const Tolerances& tol = {});

// Unitary U with U d_i = r_i for each column pair; pads the shorter side with zero rows.
CMatrix unitary_extension(const CMatrix& domain_vecs, const CMatrix& range_vecs,
                          const Tolerances& tol = {});

// Fits a colligation from model samples: lambda_i, phi(lambda_i), u_{lambda_i} (columns of U).
Colligation fit_colligation(const std::vector<BidiscPoint>& points, const std::vector<Complex>& phis,
                            const CMatrix& U, const CMatrix& P1, const Tolerances& tol = {});

// Colligation of lambda -> omega * phi(conj(tau1) lambda1, conj(tau2) lambda2).
Colligation relocate(const Colligation& c, const TorusPoint& tau, Complex omega);

// Same function, model space rotated by the unitary W.
Colligation change_basis(const Colligation& c, const CMatrix& W);

Evaluator evaluator(const Colligation& c, const Tolerances& tol = {});

} // namespace bidisc
