#include "bidisc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bidisc {

void Tolerances::validate() const {
    if (!(rank_rel > 0.0) || !(rank_rel < 1.0))
        throw InvalidInput("tolerance rank_rel must lie in (0, 1)");
    if (!(structural > 0.0))
        throw InvalidInput("tolerance structural must be positive");
    if (!(solve_cond_max > 0.0))
        throw InvalidInput("tolerance solve_cond_max must be positive");
}

std::string to_string(StructureKind kind) {
    switch (kind) {
    case StructureKind::unitary: return "unitary";
    case StructureKind::hermitian: return "hermitian";
    case StructureKind::positive_contraction: return "positive_contraction";
    case StructureKind::contraction: return "contraction";
    case StructureKind::projection: return "projection";
    }
    return "?";
}

bool all_finite(const CMatrix& A) {
    for (Eigen::Index i = 0; i < A.size(); ++i) {
        const Complex z = A.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

double spectral_norm(const CMatrix& A) {
    if (A.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(A);
    return svd.singularValues()(0);
}

namespace {

void require_finite(const CMatrix& A, const char* what) {
    if (A.rows() < 1 || A.cols() < 1) throw InvalidInput(std::string(what) + ": empty matrix");
    if (!all_finite(A)) throw InvalidInput(std::string(what) + ": non-finite entry");
}

int numerical_rank(const Eigen::VectorXd& sv, double rank_rel) {
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    const double cut = rank_rel * sv(0);
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++r;
    return r;
}

} // namespace

KernelSplit kernel_split(const CMatrix& A, const Tolerances& tol) {
    require_finite(A, "kernel_split");
    // Full V is needed for the kernel part; pad rows so V is square even when rows < cols.
    Eigen::JacobiSVD<CMatrix> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();
    const int n = static_cast<int>(A.cols());
    const int r = numerical_rank(sv, tol.rank_rel);
    KernelSplit out;
    out.rank = r;
    out.sigma_max = sv.size() ? sv(0) : 0.0;
    out.retained_ratio = (r > 0 && out.sigma_max > 0) ? sv(r - 1) / out.sigma_max : 1.0;
    const CMatrix& V = svd.matrixV();
    out.complement = V.leftCols(r);
    out.kernel = V.rightCols(n - r);
    return out;
}

CMatrix null_space(const CMatrix& A, const Tolerances& tol) {
    return kernel_split(A, tol).kernel;
}

CMatrix min_norm_solve(const CMatrix& A, const CMatrix& b, const Tolerances& tol) {
    require_finite(A, "min_norm_solve");
    if (b.rows() != A.rows() || b.cols() != 1)
        throw InvalidInput("min_norm_solve: right-hand side has wrong shape");
    if (!all_finite(b)) throw InvalidInput("min_norm_solve: non-finite right-hand side");

    Eigen::JacobiSVD<CMatrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd sv = svd.singularValues();
    const int r = numerical_rank(sv, tol.rank_rel);
    CVector x = CVector::Zero(A.cols());
    if (r > 0) {
        const double cond = sv(0) / sv(r - 1);
        if (cond > tol.solve_cond_max) {
            std::ostringstream os;
            os << "min_norm_solve: condition number " << cond << " exceeds ceiling";
            throw IllConditioned(os.str(), cond);
        }
        CVector c = svd.matrixU().leftCols(r).adjoint() * b;
        for (int i = 0; i < r; ++i) c(i) /= sv(i);
        x = svd.matrixV().leftCols(r) * c;
    }
    const double res = (A * x - b).norm();
    const double bound = tol.structural * ((sv.size() ? sv(0) : 0.0) * x.norm() + b.norm());
    if (res > bound) {
        std::ostringstream os;
        os << "min_norm_solve: system inconsistent, residual " << res;
        throw NoSolution(os.str(), res);
    }
    return x;
}

CMatrix solve(const CMatrix& A, const CMatrix& b, const Tolerances& tol) {
    if (A.rows() != A.cols()) throw InvalidInput("solve: matrix not square");
    if (b.rows() != A.rows()) throw InvalidInput("solve: right-hand side has wrong shape");
    if (A.rows() == 0) return CMatrix::Zero(0, b.cols());
    Eigen::PartialPivLU<CMatrix> lu(A);
    const double rc = lu.rcond();
    if (!(rc > 0.0) || 1.0 / rc > tol.solve_cond_max) {
        const double cond = rc > 0.0 ? 1.0 / rc : INFINITY;
        std::ostringstream os;
        os << "solve: condition number " << cond << " exceeds ceiling";
        throw IllConditioned(os.str(), cond);
    }
    CMatrix x = lu.solve(b);
    if (!all_finite(x)) throw IllConditioned("solve: non-finite solution", INFINITY);
    return x;
}

StructureResult structure_check(const CMatrix& A, StructureKind kind, const Tolerances& tol) {
    if (A.rows() != A.cols()) throw InvalidInput("structure_check: matrix not square");
    if (!all_finite(A)) throw InvalidInput("structure_check: non-finite entry");
    const Eigen::Index n = A.rows();
    double res = 0.0;
    switch (kind) {
    case StructureKind::unitary:
        res = spectral_norm(A.adjoint() * A - CMatrix::Identity(n, n));
        break;
    case StructureKind::hermitian:
        res = spectral_norm(A - A.adjoint());
        break;
    case StructureKind::positive_contraction: {
        const double herm = spectral_norm(A - A.adjoint());
        const CMatrix H = (A + A.adjoint()) / 2.0;
        Eigen::SelfAdjointEigenSolver<CMatrix> es(H, Eigen::EigenvaluesOnly);
        double lo = 0.0, hi = 0.0;
        if (n > 0) {
            lo = es.eigenvalues()(0);
            hi = es.eigenvalues()(n - 1);
        }
        res = std::max({herm, -lo, hi - 1.0, 0.0});
        break;
    }
    case StructureKind::contraction:
        res = std::max(0.0, spectral_norm(A) - 1.0);
        break;
    case StructureKind::projection:
        res = spectral_norm(A * A - A);
        break;
    }
    return {res <= tol.structural, res};
}

CMatrix psd_sqrt(const CMatrix& A) {
    const CMatrix H = (A + A.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace bidisc
