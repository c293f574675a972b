#include "bidisc/colligation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bidisc {

CMatrix Colligation::L() const {
    const Eigen::Index n = dim();
    CMatrix out(n + 1, n + 1);
    out(0, 0) = a;
    out.block(0, 1, 1, n) = beta.adjoint();
    out.block(1, 0, n, 1) = gamma;
    out.block(1, 1, n, n) = D;
    return out;
}

void Colligation::validate(const Tolerances& tol) const {
    const Eigen::Index n = dim();
    if (D.cols() != n || beta.size() != n || gamma.size() != n || P1.rows() != n || P1.cols() != n)
        throw InvalidInput("colligation: inconsistent dimensions");
    if (!all_finite(L()) || !all_finite(P1)) throw InvalidInput("colligation: non-finite entry");
    const auto u = structure_check(L(), StructureKind::unitary, tol);
    if (!u.pass) {
        std::ostringstream os;
        os << "colligation: L is not unitary (residual " << u.residual << ")";
        throw InvalidInput(os.str());
    }
    const auto h = structure_check(P1, StructureKind::hermitian, tol);
    const auto p = structure_check(P1, StructureKind::projection, tol);
    if (!h.pass || !p.pass) throw InvalidInput("colligation: P1 is not a Hermitian projection");
}

CMatrix coordinate_operator(const CMatrix& P1, const BidiscPoint& lambda) {
    const Eigen::Index n = P1.rows();
    return lambda.l1 * P1 + lambda.l2 * (CMatrix::Identity(n, n) - P1);
}

namespace {

CVector resolvent_apply(const Colligation& c, const CMatrix& I, const Tolerances& tol) {
    const Eigen::Index n = c.dim();
    return solve(CMatrix::Identity(n, n) - c.D * I, c.gamma, tol);
}

} // namespace

CVector model_vector(const Colligation& c, const BidiscPoint& lambda, const Tolerances& tol) {
    require_interior(lambda, "model_vector");
    return resolvent_apply(c, coordinate_operator(c.P1, lambda), tol);
}

Complex eval_phi(const Colligation& c, const BidiscPoint& lambda, const Tolerances& tol) {
    require_interior(lambda, "eval_phi");
    if (c.dim() == 0) return c.a;
    const CMatrix I = coordinate_operator(c.P1, lambda);
    const CVector u = resolvent_apply(c, I, tol);
    return c.a + c.beta.dot(I * u);
}

double model_residual(const Colligation& c, const BidiscPoint& lambda, const BidiscPoint& mu,
                      const Tolerances& tol) {
    const CMatrix Il = coordinate_operator(c.P1, lambda);
    const CMatrix Im = coordinate_operator(c.P1, mu);
    const CVector ul = model_vector(c, lambda, tol);
    const CVector um = model_vector(c, mu, tol);
    const Complex pl = c.a + c.beta.dot(Il * ul);
    const Complex pm = c.a + c.beta.dot(Im * um);
    const Eigen::Index n = c.dim();
    const Complex lhs = 1.0 - std::conj(pm) * pl;
    // <x, y> = y^* x
    const Complex rhs = um.dot((CMatrix::Identity(n, n) - Im.adjoint() * Il) * ul);
    return std::abs(lhs - rhs);
}

CMatrix unitary_extension(const CMatrix& domain_vecs, const CMatrix& range_vecs, const Tolerances& tol) {
    if (domain_vecs.cols() != range_vecs.cols())
        throw InvalidInput("unitary_extension: column counts differ");
    if (!all_finite(domain_vecs) || !all_finite(range_vecs))
        throw InvalidInput("unitary_extension: non-finite entry");
    const Eigen::Index N = std::max(domain_vecs.rows(), range_vecs.rows());
    const Eigen::Index k = domain_vecs.cols();
    CMatrix E = CMatrix::Zero(N, k), R = CMatrix::Zero(N, k);
    E.topRows(domain_vecs.rows()) = domain_vecs;
    R.topRows(range_vecs.rows()) = range_vecs;

    const CMatrix GE = E.adjoint() * E, GR = R.adjoint() * R;
    const double scale = std::max(1.0, std::max(GE.cwiseAbs().maxCoeff(), GR.cwiseAbs().maxCoeff()));
    const double dev = (GE - GR).cwiseAbs().maxCoeff();
    if (dev > tol.structural * scale) {
        std::ostringstream os;
        os << "unitary_extension: gramians differ by " << dev;
        throw NotAnIsometry(os.str(), dev);
    }

    Eigen::JacobiSVD<CMatrix> svd(E, Eigen::ComputeFullU | Eigen::ComputeThinV);
    const Eigen::VectorXd sv = svd.singularValues();
    int r = 0;
    if (sv.size() && sv(0) > 0)
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) > tol.rank_rel * sv(0)) ++r;

    // Image of the orthonormal basis U_r of ran E; orthonormal up to rounding.
    CMatrix F = R * svd.matrixV().leftCols(r);
    for (int i = 0; i < r; ++i) F.col(i) /= sv(i);
    if (r > 0) {
        Eigen::JacobiSVD<CMatrix> pf(F, Eigen::ComputeThinU | Eigen::ComputeThinV);
        F = pf.matrixU() * pf.matrixV().adjoint();
    }
    CMatrix Fperp;
    {
        Eigen::JacobiSVD<CMatrix> cf(F.adjoint().eval(), Eigen::ComputeFullV);
        // Right singular vectors of F^* beyond rank r span ran(F)^perp.
        Fperp = (r > 0) ? CMatrix(cf.matrixV().rightCols(N - r)) : CMatrix(CMatrix::Identity(N, N));
    }
    const CMatrix& UE = svd.matrixU();
    CMatrix U = F * UE.leftCols(r).adjoint() + Fperp * UE.rightCols(N - r).adjoint();

    const double res = (U * E - R).norm();
    const double rscale = std::max(1.0, R.norm());
    if (res > std::sqrt(tol.structural) * rscale) {
        std::ostringstream os;
        os << "unitary_extension: extension misses samples by " << res;
        throw NotAnIsometry(os.str(), res);
    }
    return U;
}

Colligation fit_colligation(const std::vector<BidiscPoint>& points, const std::vector<Complex>& phis,
                            const CMatrix& U, const CMatrix& P1, const Tolerances& tol) {
    const Eigen::Index k = static_cast<Eigen::Index>(points.size());
    const Eigen::Index n = P1.rows();
    if (static_cast<Eigen::Index>(phis.size()) != k || U.cols() != k || U.rows() != n)
        throw InvalidInput("fit_colligation: sample shapes disagree");
    CMatrix dom(n + 1, k), ran(n + 1, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        dom(0, i) = 1.0;
        dom.block(1, i, n, 1) = coordinate_operator(P1, points[i]) * U.col(i);
        ran(0, i) = phis[i];
        ran.block(1, i, n, 1) = U.col(i);
    }
    const CMatrix L = unitary_extension(dom, ran, tol);
    Colligation c;
    c.a = L(0, 0);
    c.beta = L.block(0, 1, 1, n).adjoint();
    c.gamma = L.block(1, 0, n, 1);
    c.D = L.block(1, 1, n, n);
    c.P1 = P1;
    return c;
}

Colligation relocate(const Colligation& c, const TorusPoint& tau, Complex omega) {
    const CMatrix T = coordinate_operator(c.P1, tau);
    Colligation out = c;
    out.a = omega * c.a;
    out.beta = std::conj(omega) * (T * c.beta);
    out.D = c.D * T.adjoint();
    return out;
}

Colligation change_basis(const Colligation& c, const CMatrix& W) {
    Colligation out;
    out.a = c.a;
    out.beta = W * c.beta;
    out.gamma = W * c.gamma;
    out.D = W * c.D * W.adjoint();
    out.P1 = W * c.P1 * W.adjoint();
    return out;
}

Evaluator evaluator(const Colligation& c, const Tolerances& tol) {
    return [c, tol](const BidiscPoint& p) { return eval_phi(c, p, tol); };
}

} // namespace bidisc
