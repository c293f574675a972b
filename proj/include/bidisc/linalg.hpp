#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bidisc/errors.hpp"

namespace bidisc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr Complex I_UNIT{0.0, 1.0};

struct Tolerances {
    double rank_rel = 1e-10;       // relative singular-value cutoff
    double structural = 1e-9;      // unitarity / Hermiticity residual bound
    double solve_cond_max = 1e14;  // condition-number ceiling for solves

    // Throws InvalidInput unless all positive and rank_rel < 1.
    void validate() const;
};

enum class StructureKind { unitary, hermitian, positive_contraction, contraction, projection };

struct StructureResult {
    bool pass = false;
    double residual = 0.0;
};

std::string to_string(StructureKind kind);

bool all_finite(const CMatrix& A);
double spectral_norm(const CMatrix& A);

// Orthonormal basis of ker A (possibly zero columns).
CMatrix null_space(const CMatrix& A, const Tolerances& tol = {});

// SVD-based split of the domain of A into ker A and its orthogonal complement.
struct KernelSplit {
    CMatrix kernel;       // n x k, orthonormal
    CMatrix complement;   // n x (n-k), orthonormal, spans the row space
    int rank = 0;
    double sigma_max = 0.0;
    // Smallest retained singular value divided by sigma_max; small values
    // flag a near-kernel just above the cutoff.
    double retained_ratio = 1.0;
};
KernelSplit kernel_split(const CMatrix& A, const Tolerances& tol = {});

// Minimal-norm solution of A x = b via the truncated pseudo-inverse.
CMatrix min_norm_solve(const CMatrix& A, const CMatrix& b, const Tolerances& tol = {});

// Square solve with a condition check; used for resolvents.
CMatrix solve(const CMatrix& A, const CMatrix& b, const Tolerances& tol = {});

StructureResult structure_check(const CMatrix& A, StructureKind kind, const Tolerances& tol = {});

// Square root of a Hermitian matrix whose spectrum is clamped to [0, inf).
CMatrix psd_sqrt(const CMatrix& A);

} // namespace bidisc
